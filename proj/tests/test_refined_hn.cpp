#include <gtest/gtest.h>

#include <set>

#include "p2omega/p2omega.hpp"

using namespace p2omega;

namespace {

const std::vector<HalfLaurent>& table() {
    static const auto t = io::load_golden(std::string(P2OMEGA_DATA_DIR) + "/omega_hat_golden.json");
    return t;
}

const PoincareTable& unrefined() {
    static const PoincareTable p = PoincareTable::from_hats(table());
    return p;
}

PoincareTable refined_sample() {
    PoincareTable r(2);
    r.set(1, {{{0, 0}, 1}, {{0, 2}, 1}, {{0, 4}, 1}});
    std::map<std::pair<int, int>, mpq_class> p2;
    for (int e = 0; e <= 10; e += 2) p2[{0, e}] = 1;
    r.set(2, p2);
    return r;
}

struct Mono {
    int q, t;
    long c;
};

TwoVarSeries poly2(std::initializer_list<Mono> ms, int order) {
    TwoVarSeries s(2, order);
    for (const auto& m : ms)
        if (m.q + m.t <= order) s.at(m.q, m.t) += m.c;
    return s;
}

TwoVarSeries one_minus_qt_pow(int k, int order) { return poly2({{0, 0, 1}, {k, k, -1}}, order); }

// triples of partitions, the third with parts >= 2
std::vector<long> h_counting_oracle(int n) {
    auto parts = [n](int min_part) {
        std::vector<long> p(static_cast<std::size_t>(n + 1), 0);
        p[0] = 1;
        for (int part = min_part; part <= n; ++part)
            for (int k = part; k <= n; ++k) p[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k - part)];
        return p;
    };
    auto conv = [n](const std::vector<long>& a, const std::vector<long>& b) {
        std::vector<long> c(static_cast<std::size_t>(n + 1), 0);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) c[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        return c;
    };
    auto p1 = parts(1);
    return conv(conv(p1, p1), parts(2));
}

// every tuple with d_i >= 1, sum <= k, 0 <= chi_i < bound(d_i), strictly increasing rational slopes
std::set<std::pair<std::vector<int>, std::vector<int>>> hn_brute_force(int k, int chi_slack = 0) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> out;
    std::vector<int> ds, chis;
    std::function<void(int)> rec = [&](int used) {
        bool ok = true;
        for (std::size_t i = 1; i < ds.size(); ++i)
            if (mpq_class(chis[i - 1], ds[i - 1]) >= mpq_class(chis[i], ds[i])) ok = false;
        if (!ok) return;
        out.insert({ds, chis});
        for (int d = 1; used + d <= k; ++d)
            for (int chi = 0; chi < 3 * d + chi_slack; ++chi) {
                ds.push_back(d);
                chis.push_back(chi);
                rec(used + d);
                ds.pop_back();
                chis.pop_back();
            }
    };
    rec(0);
    return out;
}

// -3/((1-y)(1-y^2)(1-y^3)) times the reference 16-term numerator
TwoVarSeries reference_f3(int order) {
    TwoVarSeries num = TwoVarSeries::from_poly(
        std::vector<long>{9, 18, 0, -44, -82, -37, 56, 143, 170, 164, 125, 89, 55, 36, 18, 9}, order);
    TwoVarSeries den = poly_series({1, -1}, order) * poly_series({1, 0, -1}, order) * poly_series({1, 0, 0, -1}, order);
    return num * den.inverse() * mpq_class(-3);
}

TwoVarSeries reference_f1_ref(int order) {
    TwoVarSeries a = poly2({{2, 0, 1}, {1, 1, 1}, {0, 2, 1}}, order);
    TwoVarSeries b = poly2({{0, 0, 1}, {0, 2, 1}, {0, 4, 1}}, order);
    return -(a * b * one_minus_qt_pow(1, order).inverse());
}

TwoVarSeries reference_f2_ref(int order) {
    TwoVarSeries c = poly2({{3, 0, 1},  {0, 3, 1},  {3, 2, -1}, {1, 4, -1}, {5, 2, -1}, {3, 4, -1}, {2, 5, -2}, {4, 5, -1},
                            {2, 7, -1}, {1, 8, -1}, {3, 8, -1}, {5, 8, -1}, {0, 9, 1},  {2, 11, -1}},
                           order);
    return reference_f1_ref(order) * c;
}

}  // namespace

TEST(RefinedHN, HMatchesCountingOracle) {
    const auto o = h_counting_oracle(20);
    TwoVarSeries h = h_desc(20);
    for (int i = 0; i <= 20; ++i) EXPECT_EQ(h.coeff(i), o[static_cast<std::size_t>(i)]) << i;
}

TEST(RefinedHN, MumfordRelationDegrees) {
    for (int d = 1; d <= 10; ++d) EXPECT_EQ(gmr_degree_series(d, 30), gmr_closed_form(d, 30)) << d;
}

TEST(RefinedHN, TypeCounts) {
    const std::vector<std::size_t> expect{1, 4, 13, 38, 101};
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(hn_types(k).size(), expect[static_cast<std::size_t>(k)]) << k;
}

TEST(RefinedHN, TypesMatchBruteForce) {
    for (int k = 0; k <= 4; ++k) {
        std::set<std::pair<std::vector<int>, std::vector<int>>> got;
        for (const auto& t : hn_types(k)) {
            EXPECT_TRUE(t.valid(k));
            got.insert({t.ds, t.chis});
        }
        EXPECT_EQ(got, hn_brute_force(k)) << k;
    }
}

TEST(RefinedHN, DroppingChiBoundAdmitsMoreTypes) {
    EXPECT_GT(hn_brute_force(2, 1).size(), hn_types(2).size());
    HNType bad{{1}, {3}};
    EXPECT_FALSE(bad.valid(2));
    HNType flat{{1, 2}, {1, 2}};
    EXPECT_FALSE(flat.valid(3));
}

TEST(RefinedHN, WeightsTwoWays) {
    for (int k = 0; k <= 4; ++k)
        for (const auto& t : hn_types(k))
            for (int d = k + 2; d <= k + 6; ++d) {
                EXPECT_EQ(s_weight(t, d), s_weight_incremental(t, d));
                EXPECT_EQ(s_plus(t, d) + s_minus(t, d), 2 * s_weight(t, d));
            }
    EXPECT_EQ(s_weight(HNType{{1, 2}, {0, 1}}, 6), 3 * 1 + 3 * 2 + 1 * 2);
}

TEST(RefinedHN, CoprimeStackSeries) {
    const int n = 25;
    for (int d = 1; d <= 5; ++d)
        for (int chi = 1; chi < 3 * d; ++chi) {
            if (std::gcd(d, chi) != 1) continue;
            EXPECT_EQ(stack_series(d, chi, unrefined(), n) * poly_series({1, -1}, n), unrefined().series(d, n));
        }
}

TEST(RefinedHN, StackSeriesTwoZeroClosedForm) {
    const int n = 30;
    TwoVarSeries closed = poly_series({1, 1, 1}, n) * poly_series({1, 0, 1, 1, 1, -1}, n) *
                          (poly_series({1, -1}, n) * poly_series({1, 0, -1}, n)).inverse();
    EXPECT_EQ(stack_series(2, 0, unrefined(), n), closed);
    EXPECT_EQ(twisted_plethystic_convention(2, 2, unrefined(), n), closed);
}

TEST(RefinedHN, HigherGcdNeedsConvention) {
    EXPECT_THROW(stack_series(3, 0, unrefined(), 10), UnsupportedGcd);
    EXPECT_THROW(stack_series(4, 2, unrefined(), 10), UnsupportedGcd);
    EXPECT_NO_THROW(stack_series(3, 0, unrefined(), 10, twisted_plethystic_convention));
}

TEST(RefinedHN, RecursionLowLevels) {
    for (int d = 2; d <= 10; ++d) {
        EXPECT_TRUE(unrefined_recursion_check(d, 0, unrefined()).pass) << d;
        if (d >= 3) {
            EXPECT_TRUE(unrefined_recursion_check(d, 1, unrefined()).pass) << d;
        }
        if (d >= 4) {
            EXPECT_TRUE(unrefined_recursion_check(d, 2, unrefined()).pass) << d;
        }
    }
    EXPECT_THROW(unrefined_recursion_check(3, 2, unrefined()), std::invalid_argument);
}

TEST(RefinedHN, RangeThreeRecursion) {
    for (int d = 4; d <= 10; ++d) {
        auto r = recursion_range3_check(d, unrefined());
        EXPECT_TRUE(r.pass) << r.summary();
    }
}

TEST(RefinedHN, RecursionDetectsPerturbedData) {
    std::vector<HalfLaurent> hats = table();
    hats[7] += HalfLaurent::y_pow(3);
    auto r = unrefined_recursion_check(8, 2, PoincareTable::from_hats(hats));
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(*r.mismatch, 3);
}

TEST(RefinedHN, LevelThreeWithPlugIn) {
    for (int d = 5; d <= 10; ++d) EXPECT_TRUE(unrefined_recursion_check(d, 3, unrefined(), twisted_plethystic_convention).pass) << d;
}

TEST(RefinedHN, ConsecutiveLevelsAreCompatible) {
    for (int k = 1; k <= 2; ++k)
        for (int d = k + 2; d <= 10; ++d) {
            const int n = (k + 1) * (d - k - 1);
            TwoVarSeries diff = hn_recursion_sum(d, k, unrefined(), n) - hn_recursion_sum(d, k - 1, unrefined(), n);
            for (int i = 0; i < k * (d - k) && i <= n; ++i) EXPECT_EQ(diff.coeff(i), 0) << "k=" << k << " d=" << d << " i=" << i;
        }
}

TEST(RefinedHN, ExtractedLowOrderFunctions) {
    const int n = 20;
    auto f = f_k_extract(2, unrefined(), n);
    TwoVarSeries f1 = poly_series({1, 1, 1}, n) * poly_series({1, -1}, n).inverse() * mpq_class(-3);
    EXPECT_EQ(f[0], TwoVarSeries::one(1, n));
    EXPECT_EQ(f[1], f1);
    EXPECT_EQ(f[2], conj_f(n) * mpq_class(3));
}

TEST(RefinedHN, ThirdFunctionIsOneThirdOfReferenceSeries) {
    const int n = 20;
    auto f = f_k_extract(3, unrefined(), n, twisted_plethystic_convention);
    EXPECT_EQ(f[3] * mpq_class(3), reference_f3(n));
    EXPECT_NE(f[3], reference_f3(n));
}

TEST(RefinedHN, ThirdFunctionAgreesWithTableRows) {
    // P_d = H (f_0 + y^{d-1} f_1 + y^{2d-4} f_2 + y^{3d-9} f_3) mod y^{4(d-4)}
    const int n = 24;
    auto f = f_k_extract(3, unrefined(), n, twisted_plethystic_convention);
    for (int d = 9; d <= 10; ++d) {
        const int order = 4 * (d - 4);
        TwoVarSeries sum = f[0] + f[1].shift(d - 1) + f[2].shift(2 * d - 4) + f[3].shift(3 * d - 9);
        TwoVarSeries with_reference = f[0] + f[1].shift(d - 1) + f[2].shift(2 * d - 4) + reference_f3(n).shift(3 * d - 9);
        TwoVarSeries p = unrefined().series(d, n);
        EXPECT_FALSE(p.first_mismatch(h_desc(n) * sum, order).has_value()) << d;
        EXPECT_TRUE(p.first_mismatch(h_desc(n) * with_reference, order).has_value()) << d;
    }
}

TEST(RefinedHN, RefinedHDiagonal) {
    EXPECT_EQ(h_ref(20).diagonal(), h_desc(10).stretch2().truncate(20));
}

TEST(RefinedHN, RefinedStackTwoZeroClosedForm) {
    const int n = 24;
    TwoVarSeries closed = poly2({{0, 0, 1}, {0, 2, 1}, {0, 4, 1}}, n) *
                          poly2({{0, 0, 1}, {1, 3, 1}, {0, 6, 1}, {2, 6, 1}, {2, 8, -1}}, n) *
                          (one_minus_qt_pow(1, n) * one_minus_qt_pow(2, n)).inverse();
    EXPECT_EQ(stack_series(2, 0, refined_sample(), n), closed);
}

TEST(RefinedHN, RefinedFirstFunction) {
    const int n = 16;
    auto fr = f_k_ref_extract(1, refined_sample(), n);
    EXPECT_EQ(fr[1], reference_f1_ref(n));
}

TEST(RefinedHN, RefinedSecondFunction) {
    const int n = 24;
    auto fr = f_k_ref_extract(2, refined_sample(), n);
    EXPECT_EQ(fr[2], reference_f2_ref(n) * one_minus_qt_pow(2, n).inverse());
    // q = t = s: f^ref_2 = s^5 f_2(s^2)
    TwoVarSeries f2 = conj_f(n / 2) * mpq_class(3);
    EXPECT_EQ(fr[2].diagonal(), f2.stretch2().shift(5).truncate(n));
}

TEST(RefinedHN, RefinedSpecialization) {
    const PoincareTable r = refined_sample();
    for (int d = 1; d <= 2; ++d) EXPECT_FALSE(refined_specialization_mismatch(d, r, unrefined()).has_value()) << d;
    PoincareTable bad(2);
    bad.set(1, {{{0, 0}, 1}, {{1, 1}, 1}, {{0, 4}, 1}, {{1, 0}, 1}});
    EXPECT_TRUE(refined_specialization_mismatch(1, bad, unrefined()).has_value());
}

TEST(RefinedHN, SyntheticRefinedRecursion) {
    // P^ref_4 chosen as the truncation of H^ref: the k = 0 instance holds exactly
    const int order = 2 * 1 * 3;
    PoincareTable r = refined_sample();
    TwoVarSeries h = h_ref(order);
    std::map<std::pair<int, int>, mpq_class> p4;
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j < order; ++j)
            if (sgn(h.coeff(i, j)) != 0) p4[{i, j}] = h.coeff(i, j);
    r.set(4, p4);
    EXPECT_TRUE(refined_recursion_check(4, 0, r).pass);
    p4[{1, 1}] += 1;
    r.set(4, p4);
    auto bad = refined_recursion_check(4, 0, r);
    EXPECT_FALSE(bad.pass);
    EXPECT_EQ(*bad.mismatch, 2);
}

TEST(RefinedHN, MissingRefinedData) {
    PoincareTable r = refined_sample();
    EXPECT_THROW(r.poly(5), MissingRefinedData);
    EXPECT_THROW(refined_recursion_check(5, 1, r), MissingRefinedData);
    EXPECT_THROW(unrefined().poly(20), std::out_of_range);
}
