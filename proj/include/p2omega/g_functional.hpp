#pragma once

#include <map>
#include <vector>

#include "gv.hpp"
#include "local_curve.hpp"
#include "partitions.hpp"

namespace p2omega {

/// (d_E, multiset of curve degrees) indexing G^E.
struct GKey {
    int dE = 0;
    std::vector<int> ms;

    int degree() const {
        int s = 3 * dE;
        for (int m : ms) s += m;
        return s;
    }
    mpz_class aut() const {
        mpz_class a = 1;
        std::size_t i = 0;
        while (i < ms.size()) {
            std::size_t j = i;
            while (j < ms.size() && ms[j] == ms[i]) ++j;
            for (std::size_t f = 2; f <= j - i; ++f) a *= static_cast<unsigned long>(f);
            i = j;
        }
        return a;
    }
    friend bool operator<(const GKey& a, const GKey& b) {
        return a.dE != b.dE ? a.dE < b.dE : a.ms < b.ms;
    }
    friend bool operator==(const GKey& a, const GKey& b) { return a.dE == b.dE && a.ms == b.ms; }
};

/// Truncated formal series in q and p_beta, indexed by monomial key.
class FormalSeries {
public:
    explicit FormalSeries(int bound) : bound_(bound) {}

    int bound() const { return bound_; }
    const std::map<GKey, HalfLaurent>& coeffs() const { return c_; }

    void add(const GKey& k, const HalfLaurent& v) {
        if (k.degree() > bound_ || v.is_zero()) return;
        auto& slot = c_[k];
        slot += v;
        if (slot.is_zero()) c_.erase(k);
    }
    HalfLaurent get(const GKey& k) const {
        auto it = c_.find(k);
        return it == c_.end() ? HalfLaurent() : it->second;
    }

    // part of exact q-degree D
    FormalSeries graded(int D) const {
        FormalSeries r(bound_);
        for (const auto& [k, v] : c_)
            if (k.degree() == D) r.c_.emplace(k, v);
        return r;
    }

    friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
        FormalSeries r = a;
        r.bound_ = std::min(a.bound_, b.bound_);
        for (const auto& [k, v] : b.c_) r.add(k, v);
        r.prune();
        return r;
    }
    friend FormalSeries operator-(const FormalSeries& a) {
        FormalSeries r = a;
        for (auto& [k, v] : r.c_) v = -v;
        return r;
    }
    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
        FormalSeries r(std::min(a.bound_, b.bound_));
        for (const auto& [ka, va] : a.c_) {
            const int da = ka.degree();
            for (const auto& [kb, vb] : b.c_) {
                if (da + kb.degree() > r.bound_) continue;
                GKey k{ka.dE + kb.dE, {}};
                k.ms.reserve(ka.ms.size() + kb.ms.size());
                std::merge(ka.ms.begin(), ka.ms.end(), kb.ms.begin(), kb.ms.end(), std::back_inserter(k.ms));
                r.add(k, va * vb);
            }
        }
        return r;
    }
    FormalSeries scaled(const HalfLaurent& s) const {
        FormalSeries r(bound_);
        for (const auto& [k, v] : c_) r.add(k, v * s);
        return r;
    }
    friend bool operator==(const FormalSeries& a, const FormalSeries& b) { return a.c_ == b.c_; }

    /// exp of a series with no degree-0 part, via D E_D = sum_j j A_j E_{D-j}.
    FormalSeries exp() const {
        std::vector<FormalSeries> A, E;
        for (int D = 0; D <= bound_; ++D) A.push_back(graded(D));
        if (!A[0].c_.empty()) throw std::domain_error("FormalSeries::exp: nonzero constant part");
        FormalSeries one(bound_);
        one.add(GKey{}, HalfLaurent(1));
        E.push_back(one);
        for (int D = 1; D <= bound_; ++D) {
            FormalSeries acc(bound_);
            for (int j = 1; j <= D; ++j)
                acc = acc + (A[static_cast<std::size_t>(j)] * E[static_cast<std::size_t>(D - j)]).scaled(HalfLaurent(j));
            E.push_back(acc.scaled(HalfLaurent(mpq_class(1, D))));
        }
        FormalSeries r(bound_);
        for (const auto& e : E) r = r + e;
        return r;
    }

    /// log of a series with constant part 1, via D L_D = D S_D - sum_{j<D} j L_j S_{D-j}.
    FormalSeries log() const {
        std::vector<FormalSeries> S, L;
        for (int D = 0; D <= bound_; ++D) S.push_back(graded(D));
        if (S[0].get(GKey{}) != HalfLaurent(1) || S[0].c_.size() != 1)
            throw std::domain_error("FormalSeries::log: constant part must be 1");
        L.push_back(FormalSeries(bound_));
        for (int D = 1; D <= bound_; ++D) {
            FormalSeries acc = S[static_cast<std::size_t>(D)].scaled(HalfLaurent(D));
            for (int j = 1; j < D; ++j)
                acc = acc + (-(L[static_cast<std::size_t>(j)] * S[static_cast<std::size_t>(D - j)])).scaled(HalfLaurent(j));
            L.push_back(acc.scaled(HalfLaurent(mpq_class(1, D))));
        }
        FormalSeries r(bound_);
        for (const auto& l : L) r = r + l;
        return r;
    }

private:
    int bound_;
    std::map<GKey, HalfLaurent> c_;

    void prune() {
        for (auto it = c_.begin(); it != c_.end();) {
            if (it->first.degree() > bound_) it = c_.erase(it);
            else ++it;
        }
    }
};

/// Solver for the packaged series G^E_{d_E, beta} of P^2 (K_S^2 = 9, [E] of degree 3).
class GSolver {
public:
    explicit GSolver(int dmax) : dmax_(dmax) {
        if (dmax < 1) throw std::invalid_argument("GSolver: dmax must be positive");
        solve();
    }

    int dmax() const { return dmax_; }
    const std::map<GKey, HalfLaurent>& values() const { return g_; }

    HalfLaurent g(int dE, std::vector<int> ms) const {
        std::sort(ms.begin(), ms.end());
        GKey k{dE, ms};
        if (k.degree() > dmax_) throw std::out_of_range("GSolver: key beyond solved degree");
        if (dE == 0) return HalfLaurent(ms.size() == 1 ? 1 : 0);
        auto it = g_.find(k);
        return it == g_.end() ? HalfLaurent() : it->second;
    }

    /// Left side of the partition-product identity built from the current G values.
    FormalSeries lhs() const {
        FormalSeries total(dmax_);
        total.add(GKey{}, HalfLaurent(1));
        for (int n = 1; 3 * n <= dmax_; ++n) {
            for (const auto& rho : partitions_of(n)) {
                const int rest = dmax_ - 3 * n;
                FormalSeries s(rest);
                for (const auto& [k, v] : coefficient_series(rest)) {
                    const int D = k.degree();
                    HalfLaurent box;
                    for (int c : rho.contents())
                        box += HalfLaurent::y_pow(3 * D * (c + 1)) - HalfLaurent::y_pow(3 * D * c) * GaussRat(2) +
                               HalfLaurent::y_pow(3 * D * (c - 1));
                    s.add(k, v * box);
                }
                FormalSeries e = s.exp();
                const GaussRat sign(n % 2 == 0 ? 1 : -1);
                const HalfLaurent pre = HalfLaurent::y_pow(9 * content_sum(rho), sign);
                for (const auto& [k, v] : e.coeffs()) total.add(GKey{k.dE + n, k.ms}, v * pre);
            }
        }
        return total;
    }

    /// exp(-sum_{dE > 0} G q^... p/|Aut|)
    FormalSeries rhs() const {
        FormalSeries x(dmax_);
        for (const auto& [k, v] : g_) x.add(k, v / GaussRat(mpq_class(k.aut())));
        return (-x).exp();
    }

    /// True iff the solved values satisfy the defining identity exactly through degree dmax.
    bool residual_is_zero() const { return lhs() == rhs(); }

    /// Two-sided y-degree bound for dE >= 2.
    static bool within_degree_bound(const GKey& k, const HalfLaurent& v) {
        if (v.is_zero()) return true;
        long sum = 0;
        for (int m : k.ms) sum += 3 * m;
        const long bound2 = 9L * (k.dE - 1) * (k.dE - 2) + 2L * (k.dE - 1) * sum;  // twice the bound, in half-units
        return v.hi() <= bound2 && v.lo() >= -bound2;
    }

    /// sum over keys of degree d of G/|Aut| prod W.
    HalfLaurent rhs_via_g(int d, const GVTable& gv) const {
        if (d > dmax_) throw std::out_of_range("rhs_via_g: d beyond solved degree");
        HalfLaurent total;
        for (const auto& [k, v] : g_) {
            if (k.degree() != d) continue;
            HalfLaurent num = v / GaussRat(mpq_class(k.aut())), den(1);
            for (int m : k.ms) {
                auto [wn, wd] = w_fraction(m, gv);
                num *= wn;
                den *= wd;
            }
            HalfLaurent term;
            try {
                term = exact_div(num, den);
            } catch (const NotDivisible&) {
                throw NonPolynomialContribution("G-route summand for d=" + std::to_string(d) + " has poles");
            }
            total += term;
        }
        if (!total.is_real() || !total.has_integer_exponents())
            throw NonPolynomialContribution("G-route sum is not a real Laurent polynomial in y");
        return total;
    }

private:
    int dmax_;
    std::map<GKey, HalfLaurent> g_;

    // sum_{dE >= 0} G/|Aut| over all keys up to the given degree
    std::map<GKey, HalfLaurent> coefficient_series(int bound) const {
        std::map<GKey, HalfLaurent> c;
        for (int b = 1; b <= bound; ++b) c.emplace(GKey{0, {b}}, HalfLaurent(1));
        for (const auto& [k, v] : g_)
            if (k.degree() <= bound) c.emplace(k, v / GaussRat(mpq_class(k.aut())));
        return c;
    }

    void solve() {
        // the degree-D part of the left side only involves G of degree <= D - 3
        for (int pass = 0; pass <= dmax_ / 3 + 1; ++pass) {
            FormalSeries x = -lhs().log();
            std::map<GKey, HalfLaurent> next;
            for (const auto& [k, v] : x.coeffs())
                if (k.dE > 0) next.emplace(k, v * GaussRat(mpq_class(k.aut())));
            if (next == g_) break;
            g_ = std::move(next);
        }
    }
};

/// Convenience wrapper returning all solved G with 3 dE + sum ms <= dmax.
inline std::map<GKey, HalfLaurent> solve_g(int dmax) { return GSolver(dmax).values(); }

}  // namespace p2omega
