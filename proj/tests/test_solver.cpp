#include <gtest/gtest.h>

#include "p2omega/p2omega.hpp"

using namespace p2omega;

namespace {

const std::vector<HalfLaurent>& table() {
    static const auto t = io::load_golden(std::string(P2OMEGA_DATA_DIR) + "/omega_hat_golden.json");
    return t;
}

// y^{-s} p(y) [3d]
HalfLaurent closed_form(int d, int s, std::vector<long> p) {
    return (HalfLaurent::from_y_coeffs(p) * quantum_integer(3 * d)).shift(-2 * s);
}

std::vector<HalfLaurent> reference_omegas() {
    return {
        closed_form(1, 0, {1}),
        closed_form(2, 0, {1}),
        closed_form(3, 1, {1, 1, 1}),
        closed_form(4, 3, {1, 1, 4, 4, 4, 1, 1}),
        closed_form(5, 6, {1, 1, 4, 7, 13, 19, 23, 19, 13, 7, 4, 1, 1}),
        closed_form(6, 10, {1, 1, 4, 7, 16, 25, 47, 68, 104, 128, 146, 128, 104, 68, 47, 25, 16, 7, 4, 1, 1}),
    };
}

}  // namespace

TEST(Solver, ClosedFormsFromBundledGV) {
    auto recs = solve_omegas(GVTable::p2_bundled(), 6);
    const auto expected = reference_omegas();
    ASSERT_EQ(recs.size(), 6u);
    for (int d = 1; d <= 6; ++d) EXPECT_EQ(recs[static_cast<std::size_t>(d - 1)].omega, expected[static_cast<std::size_t>(d - 1)]) << d;
}

TEST(Solver, TreeRouteGivesSameOmegas) {
    auto a = solve_omegas(GVTable::p2_bundled(), 6, RhsMethod::Trees);
    const auto expected = reference_omegas();
    for (int d = 1; d <= 6; ++d) EXPECT_EQ(a[static_cast<std::size_t>(d - 1)].omega, expected[static_cast<std::size_t>(d - 1)]);
}

TEST(Solver, HatsMatchTableRows) {
    auto recs = solve_omegas(GVTable::p2_bundled(), 6);
    for (const auto& r : recs) EXPECT_EQ(r.omega_hat, table()[static_cast<std::size_t>(r.d - 1)]) << r.d;
}

TEST(Solver, HatDegreeAndEulerCharacteristic) {
    for (int d = 1; d <= 10; ++d) {
        const HalfLaurent& h = table()[static_cast<std::size_t>(d - 1)];
        EXPECT_EQ(h.hi(), 2 * (d - 1) * (d - 2));
        EXPECT_EQ(h.lo(), 0);
        EXPECT_EQ(omega_hat(d, omega_from_hat(d, h)), h);
        EXPECT_EQ(poincare_from_hat(d, h).eval_at_one(), h.eval_at_one() * GaussRat(3 * d));
    }
}

TEST(Solver, InversionRecoversBundledRows) {
    std::vector<HalfLaurent> first6(table().begin(), table().begin() + 6);
    EXPECT_EQ(invert_to_gv(first6), GVTable::p2_bundled());
    EXPECT_EQ(invert_to_gv(first6, RhsMethod::Trees), GVTable::p2_bundled());
}

TEST(Solver, RoundTripThroughDegreeTen) {
    GVTable gv = invert_to_gv(table());
    EXPECT_EQ(gv.get(0, 7), mpz_class(188454));
    EXPECT_EQ(gv.get(0, 8), mpz_class(-2228160));
    EXPECT_EQ(gv.get(0, 9), mpz_class(27748899));
    EXPECT_EQ(gv.get(0, 10), mpz_class(-360012150));
    auto recs = solve_omegas(gv, 10);
    for (const auto& r : recs) EXPECT_EQ(r.omega_hat, table()[static_cast<std::size_t>(r.d - 1)]) << r.d;
}

TEST(Solver, RoutesAgreeThroughDegreeEight) {
    GVTable gv = invert_to_gv(table());
    GSolver g(8);
    for (int d = 3; d <= 8; ++d) EXPECT_EQ(rhs_tree_sum(d, gv), g.rhs_via_g(d, gv)) << d;
}

TEST(Solver, BracketIsIntegral) {
    GVTable gv = invert_to_gv(table());
    for (int d = 1; d <= 10; ++d) EXPECT_TRUE(integrality_bracket(d, gv, omega_from_hat(d, table()[static_cast<std::size_t>(d - 1)]))) << d;
}

TEST(Solver, BracketFailsForPerturbedGV) {
    GVTable gv = GVTable::p2_bundled();
    gv.set(0, 4, -191);
    EXPECT_FALSE(integrality_bracket(4, gv, omega_from_hat(4, table()[3])));
}

TEST(Solver, SmallestDegreesHaveZeroBracket) {
    const GVTable gv = GVTable::p2_bundled();
    for (int d = 1; d <= 2; ++d) {
        auto b = bracket(d, gv, reference_omegas()[static_cast<std::size_t>(d - 1)]);
        ASSERT_TRUE(b.has_value());
        EXPECT_TRUE(b->is_zero());
    }
}

TEST(Solver, PerturbedGVViolatesInvariant) {
    GVTable gv = GVTable::p2_bundled();
    gv.set(1, 5, -4451);
    EXPECT_ANY_THROW(solve_omegas(gv, 5));
}

TEST(Solver, ValidateRejectsBrokenOmegas) {
    const HalfLaurent om = reference_omegas()[3];
    EXPECT_NO_THROW(validate_omega(4, om));
    EXPECT_THROW(validate_omega(4, om + HalfLaurent(GaussRat(mpq_class(1, 2)))), NonIntegerGV);
    EXPECT_THROW(validate_omega(4, om - HalfLaurent(100)), NegativeCoefficient);
    EXPECT_THROW(validate_omega(4, om + HalfLaurent::y_pow(1)), NotDivisible);
    EXPECT_THROW(validate_omega(3, om), NotDivisible);
}

TEST(Solver, MissingRowIsReported) {
    GVTable gv = GVTable::p2_bundled();
    EXPECT_THROW(solve_omegas(gv, 7), MissingGV);
}

TEST(Solver, ExpansionInUBasis) {
    const GVTable gv = GVTable::p2_bundled();
    for (int d = 1; d <= 6; ++d) EXPECT_EQ(expand_in_u_basis(d, f_curly(d, gv), genus_of(d)), gv.row(d));
    EXPECT_THROW(expand_in_u_basis(3, f_curly(3, gv) + HalfLaurent(GaussRat(mpq_class(1, 3))), 1), NonIntegerGV);
    EXPECT_THROW(expand_in_u_basis(3, f_curly(4, gv), 1), NonIntegerGV);
}
