#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "asymptotics.hpp"

namespace p2omega {

/// Descendent-algebra series H(y) = prod_{k>0} 1/((1-y^k)^2 (1-y^{k+1})).
inline TwoVarSeries h_desc(int order) {
    std::vector<ProductFactor> f;
    for (int k = 1; k <= order; ++k) {
        f.push_back({{k, 0}, -2});
        f.push_back({{k + 1, 0}, -1});
    }
    return product_expand(f, 1, order);
}

/// H^ref(q,t) = prod_{k>0} 1/((1-q^{k-1}t^{k+1})(1-q^{k+1}t^{k-1})(1-q^{k+1}t^{k+1})).
inline TwoVarSeries h_ref(int order) {
    std::vector<ProductFactor> f;
    for (int k = 1; 2 * k <= order; ++k) {
        f.push_back({{k - 1, k + 1}, -1});
        f.push_back({{k + 1, k - 1}, -1});
        if (2 * k + 2 <= order) f.push_back({{k + 1, k + 1}, -1});
    }
    return product_expand(f, 2, order);
}

/// Degrees of the d'=1 generalized Mumford relations: sum_{k>d} sum_{chi'=-2..0} sum_{i=0..2} y^{k-2+i}.
inline TwoVarSeries gmr_degree_series(int d, int order) {
    TwoVarSeries s(1, order);
    for (int k = d + 1; k - 2 <= order; ++k)
        for (int chi = -2; chi <= 0; ++chi)
            for (int i = 0; i <= 2; ++i)
                if (k - 2 + i <= order) s.at(k - 2 + i) += 1;
    return s;
}

/// 3 y^{d-1} (1+y+y^2)/(1-y)
inline TwoVarSeries gmr_closed_form(int d, int order) {
    return (poly_series({1, 1, 1}, order) * poly_series({1, -1}, order).inverse()).shift(d - 1) * mpq_class(3);
}

/// Harder-Narasimhan type: 0 <= chi_1/d_1 < ... < chi_m/d_m < 3.
struct HNType {
    std::vector<int> ds;
    std::vector<int> chis;

    int size() const { return static_cast<int>(ds.size()); }
    int total_degree() const { return std::accumulate(ds.begin(), ds.end(), 0); }
    int total_chi() const { return std::accumulate(chis.begin(), chis.end(), 0); }

    bool valid(int k) const {
        if (ds.size() != chis.size() || total_degree() > k) return false;
        for (std::size_t i = 0; i < ds.size(); ++i) {
            if (ds[i] < 1 || chis[i] < 0 || chis[i] >= 3 * ds[i]) return false;
            // slopes compared by cross-multiplication
            if (i > 0 && static_cast<long>(chis[i - 1]) * ds[i] >= static_cast<long>(chis[i]) * ds[i - 1]) return false;
        }
        return true;
    }
    friend bool operator==(const HNType& a, const HNType& b) { return a.ds == b.ds && a.chis == b.chis; }
    friend bool operator<(const HNType& a, const HNType& b) {
        return a.ds != b.ds ? a.ds < b.ds : a.chis < b.chis;
    }
};

/// All HN types with sum d_i <= k, the empty type first, then depth-first by increasing slope.
inline std::vector<HNType> hn_types(int k) {
    std::vector<HNType> out{HNType{}};
    HNType cur;
    std::function<void(int)> rec = [&](int used) {
        for (int d = 1; used + d <= k; ++d)
            for (int chi = 0; chi < 3 * d; ++chi) {
                if (!cur.ds.empty() &&
                    static_cast<long>(cur.chis.back()) * d >= static_cast<long>(chi) * cur.ds.back())
                    continue;
                cur.ds.push_back(d);
                cur.chis.push_back(chi);
                out.push_back(cur);
                rec(used + d);
                cur.ds.pop_back();
                cur.chis.pop_back();
            }
    };
    rec(0);
    return out;
}

/// s(d) = sum_{0 <= i < j <= m} d_i d_j with d_0 = d - sum d_i.
inline long s_weight(const HNType& t, int d) {
    std::vector<long> all{static_cast<long>(d - t.total_degree())};
    for (int x : t.ds) all.push_back(x);
    long s = 0;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) s += all[i] * all[j];
    return s;
}

/// Same weight accumulated part by part: appending d_j adds d_j times everything before it.
inline long s_weight_incremental(const HNType& t, int d) {
    long before = d - t.total_degree(), s = 0;
    for (int x : t.ds) {
        s += before * x;
        before += x;
    }
    return s;
}

inline long s_plus(const HNType& t, int d) { return s_weight(t, d) + t.total_chi(); }
inline long s_minus(const HNType& t, int d) { return s_weight(t, d) - t.total_chi(); }

/// Poincare polynomials P_d (one variable y) or P^ref_d (two variables q, t), stored sparsely.
class PoincareTable {
public:
    explicit PoincareTable(int nvars = 1) : nvars_(nvars) {
        if (nvars != 1 && nvars != 2) throw std::invalid_argument("PoincareTable: nvars must be 1 or 2");
    }

    int nvars() const { return nvars_; }
    bool has(int d) const { return polys_.count(d) != 0; }
    int max_degree() const { return polys_.empty() ? 0 : polys_.rbegin()->first; }

    void set(int d, std::map<std::pair<int, int>, mpq_class> coeffs) {
        for (const auto& [e, c] : coeffs) {
            if (e.first < 0 || e.second < 0 || (nvars_ == 1 && e.second != 0))
                throw std::invalid_argument("PoincareTable: bad exponent");
        }
        polys_[d] = std::move(coeffs);
    }
    const std::map<std::pair<int, int>, mpq_class>& poly(int d) const {
        auto it = polys_.find(d);
        if (it == polys_.end()) {
            const std::string msg = "Poincare polynomial for d=" + std::to_string(d) + " missing";
            if (nvars_ == 2) throw MissingRefinedData(msg);
            throw std::out_of_range(msg);
        }
        return it->second;
    }
    TwoVarSeries series(int d, int order) const {
        TwoVarSeries s(nvars_, order);
        for (const auto& [e, c] : poly(d))
            if (e.first + e.second <= order) s.at(e.first, e.second) = c;
        return s;
    }

    /// P_d = Omega-hat_d (1 + y + ... + y^{3d-1}) from Omega-hat_1, Omega-hat_2, ...
    static PoincareTable from_hats(const std::vector<HalfLaurent>& hats) {
        PoincareTable t(1);
        for (std::size_t i = 0; i < hats.size(); ++i) {
            const int d = static_cast<int>(i) + 1;
            std::map<std::pair<int, int>, mpq_class> c;
            const HalfLaurent poly = poincare_from_hat(d, hats[i]);
            for (const auto& [e, v] : poly.terms()) c[{e / 2, 0}] = v.re;
            t.set(d, std::move(c));
        }
        return t;
    }

private:
    int nvars_;
    std::map<int, std::map<std::pair<int, int>, mpq_class>> polys_;
};

namespace detail {

// y in one variable, qt in two
inline TwoVarSeries base_shift(const TwoVarSeries& s, long e) {
    return s.nvars() == 1 ? s.shift(static_cast<int>(e)) : s.shift(static_cast<int>(e), static_cast<int>(e));
}

inline TwoVarSeries one_minus_base_inv(int nvars, int order) {
    TwoVarSeries b = TwoVarSeries::one(nvars, order) -
                     TwoVarSeries::monomial(nvars, order, 1, nvars == 2 ? 1 : 0);
    return b.inverse();
}

}  // namespace detail

/// P_d/(1-y), or P^ref_d/(1-qt).
inline TwoVarSeries coprime_stack(int d, const PoincareTable& p, int order) {
    return p.series(d, order) * detail::one_minus_base_inv(p.nvars(), order);
}

/// Stack series for gcd(d, chi) = g >= 2: receives (d, g, table, order).
using StackConvention = std::function<TwoVarSeries(int, int, const PoincareTable&, int)>;

/// Opt-in convention for arbitrary gcd g, d = g a:
/// sum over multisets {(k, n)} with sum k n = g of prod 1/(k^m m!) (-1)^{g^2 a^2 + sum n^2 a^2} y^{a^2 (g^2 - sum k n^2)/2} prod psi_k(P_{na}/(1-y)),
/// psi_k being y -> y^k (q, t -> q^k, t^k). Agrees with the built-in g = 2 rule at d = 2.
inline TwoVarSeries twisted_plethystic_convention(int d, int g, const PoincareTable& p, int order) {
    const int a = d / g;
    // all (k, n) with k n <= g
    std::vector<std::pair<int, int>> parts;
    for (int k = 1; k <= g; ++k)
        for (int n = 1; k * n <= g; ++n) parts.emplace_back(k, n);
    std::map<int, TwoVarSeries> pc;
    auto psi_pc = [&](int k, int n) {
        const int key = k * 1000 + n;
        auto it = pc.find(key);
        if (it == pc.end()) it = pc.emplace(key, coprime_stack(n * a, p, order).substitute_power(k)).first;
        return it->second;
    };
    TwoVarSeries total(p.nvars(), order);
    std::vector<int> mult(parts.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int rem) {
        if (rem == 0) {
            mpq_class coeff = 1;
            long sq = 0, sign_exp = static_cast<long>(g) * g * a * a;
            TwoVarSeries prod = TwoVarSeries::one(p.nvars(), order);
            for (std::size_t i = 0; i < parts.size(); ++i) {
                const int m = mult[i];
                if (!m) continue;
                const auto [k, n] = parts[i];
                mpz_class den = 1;
                for (int j = 0; j < m; ++j) den *= k;
                for (int j = 2; j <= m; ++j) den *= j;
                coeff /= mpq_class(den);
                sq += static_cast<long>(m) * k * n * n;
                sign_exp += static_cast<long>(m) * n * n * a * a;
                TwoVarSeries f = psi_pc(k, n);
                for (int j = 0; j < m; ++j) prod *= f;
            }
            const long e = static_cast<long>(a) * a * (static_cast<long>(g) * g - sq) / 2;
            if (sign_exp % 2) coeff = -coeff;
            total += detail::base_shift(prod, e) * coeff;
            return;
        }
        if (idx == parts.size()) return;
        const auto [k, n] = parts[idx];
        for (int m = 0; m * k * n <= rem; ++m) {
            mult[idx] = m;
            rec(idx + 1, rem - m * k * n);
        }
        mult[idx] = 0;
    };
    rec(0, g);
    return total;
}

/// Poincare series of the stack of semistable sheaves of class (d, chi).
inline TwoVarSeries stack_series(int d, int chi, const PoincareTable& p, int order,
                                 const StackConvention& convention = nullptr) {
    const int g = std::gcd(d, chi);
    if (g == 1) return coprime_stack(d, p, order);
    if (g == 2 && d == 2) {
        TwoVarSeries pc1 = coprime_stack(1, p, order);
        return coprime_stack(2, p, order) + detail::base_shift(pc1 * pc1, 1) * mpq_class(1, 2) -
               detail::base_shift(pc1.substitute_power(2), 1) * mpq_class(1, 2);
    }
    if (!convention)
        throw UnsupportedGcd("stack series for (d, chi) = (" + std::to_string(d) + ", " + std::to_string(chi) +
                             ") needs a convention for gcd " + std::to_string(g));
    return convention(d, g, p, order);
}

namespace detail {

inline TwoVarSeries hn_product(const HNType& t, const PoincareTable& p, int order, const StackConvention& conv) {
    TwoVarSeries prod = TwoVarSeries::one(p.nvars(), order);
    for (int i = 0; i < t.size(); ++i)
        prod *= stack_series(t.ds[static_cast<std::size_t>(i)], t.chis[static_cast<std::size_t>(i)], p, order, conv);
    return prod;
}

}  // namespace detail

/// Left side of the HN recursion: sum_{types} y^{s} P_{d_0} prod stack series (or the refined q^{s+} t^{s-} version).
inline TwoVarSeries hn_recursion_sum(int d, int k, const PoincareTable& p, int order,
                                     const StackConvention& conv = nullptr) {
    TwoVarSeries total(p.nvars(), order);
    for (const auto& t : hn_types(k)) {
        TwoVarSeries term = p.series(d - t.total_degree(), order) * detail::hn_product(t, p, order, conv);
        if (p.nvars() == 1) term = term.shift(static_cast<int>(s_weight(t, d)));
        else term = term.shift(static_cast<int>(s_plus(t, d)), static_cast<int>(s_minus(t, d)));
        total += term;
    }
    return total;
}

/// Sum over HN_k of y^{s} P_{d_0} prod P~ against H(y), mod y^{(k+1)(d-k-1)}.
inline TruncatedCheckReport unrefined_recursion_check(int d, int k, const PoincareTable& p,
                                                      const StackConvention& conv = nullptr) {
    if (d <= k + 1) throw std::invalid_argument("unrefined_recursion_check: needs d > k + 1");
    const int order = (k + 1) * (d - k - 1);
    return compare_series("HN recursion k=" + std::to_string(k), d, hn_recursion_sum(d, k, p, order, conv),
                          h_desc(order), order);
}

/// The k = 2 recursion written out term by term, mod y^{3d-9}.
inline TruncatedCheckReport recursion_range3_check(int d, const PoincareTable& p) {
    const int order = 3 * d - 9;
    TwoVarSeries p10 = stack_series(1, 0, p, order), p21 = stack_series(2, 1, p, order), p20 = stack_series(2, 0, p, order);
    TwoVarSeries lhs = p.series(d, order) + (p10 * p.series(d - 1, order)).shift(d - 1) * mpq_class(3) +
                       (p21 * p.series(d - 2, order)).shift(2 * d - 4) * mpq_class(3) +
                       (p20 * p.series(d - 2, order)).shift(2 * d - 4) * mpq_class(3) +
                       (p10 * p10 * p.series(d - 2, order)).shift(2 * d - 3) * mpq_class(3);
    return compare_series("range-3 recursion", d, lhs, h_desc(order), order);
}

/// Refined HN recursion against H^ref mod (q,t)^{2(k+1)(d-k-1)}.
inline TruncatedCheckReport refined_recursion_check(int d, int k, const PoincareTable& pref,
                                                    const StackConvention& conv = nullptr) {
    if (pref.nvars() != 2) throw std::invalid_argument("refined_recursion_check: needs refined data");
    if (d <= k + 1) throw std::invalid_argument("refined_recursion_check: needs d > k + 1");
    const int order = 2 * (k + 1) * (d - k - 1);
    TwoVarSeries lhs = hn_recursion_sum(d, k, pref, order - 1, conv);
    TwoVarSeries rhs = h_ref(order - 1);
    TruncatedCheckReport r = compare_series("refined HN recursion k=" + std::to_string(k), d, lhs, rhs, order);
    if (r.mismatch) {
        // report the first differing monomial of that total degree
        for (int i = 0; i <= *r.mismatch; ++i)
            if (lhs.coeff(i, *r.mismatch - i) != rhs.coeff(i, *r.mismatch - i)) {
                r.lhs_value = lhs.coeff(i, *r.mismatch - i);
                r.rhs_value = rhs.coeff(i, *r.mismatch - i);
                break;
            }
    }
    return r;
}

/// f_0, ..., f_k with P_d = H sum_j y^{j(d-j)} f_j; needs P_1..P_k.
inline std::vector<TwoVarSeries> f_k_extract(int k, const PoincareTable& p, int order,
                                             const StackConvention& conv = nullptr) {
    std::vector<TwoVarSeries> f{TwoVarSeries::one(1, order)};
    const auto types = hn_types(k);
    for (int level = 1; level <= k; ++level) {
        TwoVarSeries acc(1, order);
        for (const auto& t : types) {
            const int m = t.total_degree();
            if (m == 0 || m > level) continue;
            const int j = level - m;
            const long w = static_cast<long>(j) * m + s_weight_incremental(t, m);
            acc += (f[static_cast<std::size_t>(j)] * detail::hn_product(t, p, order, conv)).shift(static_cast<int>(w));
        }
        f.push_back(-acc);
    }
    return f;
}

/// f^ref_0, ..., f^ref_k with P^ref_d = H^ref sum_j q^{j(d-j)} t^{j(d-j-3)+c_j} f^ref_j, c_0 = 0, c_j = 1 otherwise.
inline std::vector<TwoVarSeries> f_k_ref_extract(int k, const PoincareTable& pref, int order,
                                                 const StackConvention& conv = nullptr) {
    if (pref.nvars() != 2) throw std::invalid_argument("f_k_ref_extract: needs refined data");
    auto c = [](int j) { return j == 0 ? 0 : 1; };
    std::vector<TwoVarSeries> f{TwoVarSeries::one(2, order)};
    const auto types = hn_types(k);
    for (int level = 1; level <= k; ++level) {
        TwoVarSeries acc(2, order);
        for (const auto& t : types) {
            const int m = t.total_degree();
            if (m == 0 || m > level) continue;
            const int j = level - m;
            const long inner = static_cast<long>(j) * m + s_weight_incremental(t, m);
            const long qe = inner + t.total_chi();
            const long te = inner - t.total_chi() + 3L * m + c(j) - c(level);
            acc += (f[static_cast<std::size_t>(j)] * detail::hn_product(t, pref, order, conv))
                       .shift(static_cast<int>(qe), static_cast<int>(te));
        }
        f.push_back(-acc);
    }
    return f;
}

/// P^ref_d(y^{1/2}, y^{1/2}) must equal P_d(y); returns the first mismatching power of y^{1/2}, if any.
inline std::optional<int> refined_specialization_mismatch(int d, const PoincareTable& pref, const PoincareTable& p) {
    int deg = 0;
    for (const auto& [e, c] : pref.poly(d)) deg = std::max(deg, e.first + e.second);
    for (const auto& [e, c] : p.poly(d)) deg = std::max(deg, 2 * e.first);
    TwoVarSeries diag = pref.series(d, deg).diagonal();
    TwoVarSeries stretched = p.series(d, deg / 2 + 1).stretch2().truncate(deg);
    return diag.first_mismatch(stretched, deg + 1);
}

}  // namespace p2omega
