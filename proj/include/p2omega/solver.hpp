#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "g_functional.hpp"
#include "tree_sum.hpp"

namespace p2omega {

enum class RhsMethod { Functional, Trees };

/// Omega_d(y^{1/2}) together with Omega-hat_d.
struct OmegaRecord {
    int d = 0;
    HalfLaurent omega;
    HalfLaurent omega_hat;
};

inline int genus_of(int d) { return (d - 1) * (d - 2) / 2; }

/// 1 + y + ... + y^{n-1}
inline HalfLaurent geometric(int n) {
    std::vector<long> c(static_cast<std::size_t>(n), 1);
    return HalfLaurent::from_y_coeffs(c);
}

/// y^{g(d)} Omega_d / [3d]; throws NotDivisible.
inline HalfLaurent omega_hat(int d, const HalfLaurent& omega) {
    HalfLaurent h = exact_div(omega, quantum_integer(3 * d)).shift(2 * genus_of(d));
    if (!h.has_integer_exponents() || !h.has_integer_coeffs())
        throw NotDivisible("omega_hat: d=" + std::to_string(d) + " quotient is not an integer polynomial in y");
    return h;
}

inline HalfLaurent omega_from_hat(int d, const HalfLaurent& hat) {
    return (hat * quantum_integer(3 * d)).shift(-2 * genus_of(d));
}

/// Poincare polynomial of M_d: Omega-hat_d (1 + y + ... + y^{3d-1}).
inline HalfLaurent poincare_from_hat(int d, const HalfLaurent& hat) { return hat * geometric(3 * d); }

namespace detail {

// 3d (-1)^{d+1} Omega_d / [3d]; (-1)^{d^2+1} = (-1)^{d+1}
inline HalfLaurent x_term(int d, const HalfLaurent& omega) {
    HalfLaurent q = exact_div(omega, quantum_integer(3 * d));
    return q * GaussRat(d % 2 == 1 ? 3 * d : -3 * d);
}

}  // namespace detail

/// Integrality bracket (F_d - 3d (-1)^{d+1} Omega_d/[3d]) / (y^{1/2}-y^{-1/2})^2, if it is a Laurent polynomial.
inline std::optional<HalfLaurent> bracket(int d, const GVTable& gv, const HalfLaurent& omega) {
    try {
        HalfLaurent b = exact_div(f_curly(d, gv) - detail::x_term(d, omega), u_factor());
        if (!b.has_integer_exponents()) return std::nullopt;
        return b;
    } catch (const NotDivisible&) {
        return std::nullopt;
    }
}

/// True iff the bracket lies in Z[y, y^{-1}].
inline bool integrality_bracket(int d, const GVTable& gv, const HalfLaurent& omega) {
    auto b = bracket(d, gv, omega);
    return b && b->has_integer_coeffs();
}

/// Checks every structural invariant of Omega_d; throws a typed error naming the first failure.
inline void validate_omega(int d, const HalfLaurent& omega) {
    const std::string tag = "Omega_" + std::to_string(d);
    if (!omega.has_integer_coeffs() || !omega.is_real())
        throw NonIntegerGV(tag + " has non-integer coefficients");
    for (const auto& [e, c] : omega.terms())
        if (sgn(c.re) < 0) throw NegativeCoefficient(tag + " has a negative coefficient at y^(" + std::to_string(e) + "/2)");
    if (!(omega.invert_y() == omega)) throw NotDivisible(tag + " is not palindromic");
    if (omega.hi() != d * d + 1) throw NotDivisible(tag + " has the wrong top exponent");
    HalfLaurent hat = omega_hat(d, omega);
    if (hat.coeff(0) != GaussRat(1)) throw NotDivisible(tag + ": Omega-hat has constant term != 1");
}

/// Forward solver: GV table to Omega_1..Omega_dmax.
class OmegaSolver {
public:
    OmegaSolver(GVTable gv, RhsMethod method = RhsMethod::Functional) : gv_(std::move(gv)), method_(method) {}

    const GVTable& gv() const { return gv_; }
    const std::vector<OmegaRecord>& records() const { return records_; }

    /// RHS(d): sum of Cont_T over trees with a circle (equivalently the G-route sum).
    HalfLaurent rhs(int d) {
        if (d < 3) return {};
        if (method_ == RhsMethod::Trees) return rhs_tree_sum(d, gv_);
        if (!g_ || g_->dmax() < d) g_ = std::make_unique<GSolver>(std::max(d, g_ ? 2 * g_->dmax() : d));
        return g_->rhs_via_g(d, gv_);
    }

    /// B_d = RHS(d) - sum_{k | d, k > 1} B_{d/k}(y^k) / k
    HalfLaurent bracket_from_rhs(int d) {
        HalfLaurent b = rhs(d);
        for (int k = 2; k <= d; ++k)
            if (d % k == 0) b -= brackets_.at(static_cast<std::size_t>(d / k - 1)).substitute_power(k) / GaussRat(k);
        return b;
    }

    /// Computes and validates Omega_d; Omega_1..Omega_{d-1} must already be solved.
    const OmegaRecord& solve_next() {
        const int d = static_cast<int>(records_.size()) + 1;
        HalfLaurent b = bracket_from_rhs(d);
        HalfLaurent x = f_curly(d, gv_) - u_factor() * b;
        HalfLaurent q = x / GaussRat(d % 2 == 1 ? 3 * d : -3 * d);
        HalfLaurent omega = q * quantum_integer(3 * d);
        validate_omega(d, omega);
        brackets_.push_back(std::move(b));
        records_.push_back(OmegaRecord{d, omega, omega_hat(d, omega)});
        return records_.back();
    }

    const std::vector<OmegaRecord>& solve(int dmax) {
        while (static_cast<int>(records_.size()) < dmax) solve_next();
        return records_;
    }

private:
    GVTable gv_;
    RhsMethod method_;
    std::vector<OmegaRecord> records_;
    std::vector<HalfLaurent> brackets_;
    std::unique_ptr<GSolver> g_;
};

inline std::vector<OmegaRecord> solve_omegas(const GVTable& gv, int dmax, RhsMethod method = RhsMethod::Functional) {
    OmegaSolver s(gv, method);
    return s.solve(dmax);
}

/// Expands F in the basis (-1)^g (y^{1/2}-y^{-1/2})^{2g}, g = 0..gmax, requiring integer coefficients.
inline std::vector<mpz_class> expand_in_u_basis(int d, HalfLaurent f, int gmax) {
    std::vector<mpz_class> n(static_cast<std::size_t>(gmax + 1));
    const HalfLaurent u = u_factor();
    for (int g = gmax; g >= 0; --g) {
        HalfLaurent ug = u.pow(static_cast<unsigned>(g));
        // u^g has top term y^g with coefficient 1
        GaussRat lead = f.coeff(2 * g);
        if (!lead.is_integer())
            throw NonIntegerGV("n_{" + std::to_string(g) + "," + std::to_string(d) + "} = " + lead.str() + " is not an integer");
        mpz_class c = lead.re.get_num();
        n[static_cast<std::size_t>(g)] = g % 2 ? mpz_class(-c) : c;
        f -= ug * lead;
    }
    if (!f.is_zero())
        throw NonIntegerGV("F_" + std::to_string(d) + " is not in the span of (y^{1/2}-y^{-1/2})^{2g}, g <= " +
                           std::to_string(gmax) + "; remainder " + f.str());
    return n;
}

/// Recovers n_{g,d} for d <= omega-hats.size() from Omega-hat_1, Omega-hat_2, ...
inline GVTable invert_to_gv(const std::vector<HalfLaurent>& hats, RhsMethod method = RhsMethod::Functional) {
    GVTable gv;
    std::vector<HalfLaurent> brackets;
    std::unique_ptr<GSolver> gs;
    for (int d = 1; d <= static_cast<int>(hats.size()); ++d) {
        HalfLaurent omega = omega_from_hat(d, hats[static_cast<std::size_t>(d - 1)]);
        HalfLaurent b;
        if (d >= 3) {
            if (method == RhsMethod::Trees) {
                b = rhs_tree_sum(d, gv);
            } else {
                if (!gs) gs = std::make_unique<GSolver>(static_cast<int>(hats.size()));
                b = gs->rhs_via_g(d, gv);
            }
        }
        for (int k = 2; k <= d; ++k)
            if (d % k == 0) b -= brackets[static_cast<std::size_t>(d / k - 1)].substitute_power(k) / GaussRat(k);
        HalfLaurent f = detail::x_term(d, omega) + u_factor() * b;
        auto row = expand_in_u_basis(d, f, genus_of(d));
        for (int g = 0; g <= genus_of(d); ++g) gv.set(g, d, row[static_cast<std::size_t>(g)]);
        brackets.push_back(std::move(b));
    }
    return gv;
}

}  // namespace p2omega
