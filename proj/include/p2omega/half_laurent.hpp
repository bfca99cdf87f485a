#pragma once

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "gauss_rat.hpp"

namespace p2omega {

/// Laurent polynomial in y^{1/2} with Gaussian-rational coefficients.
///
/// Exponents are stored in half-units: the term (n, c) means c * y^{n/2}.
/// Terms are kept sorted by exponent with no zero coefficients, so equality
/// of values is equality of term lists.
class HalfLaurent {
public:
    using Term = std::pair<int, GaussRat>;

    HalfLaurent() = default;
    HalfLaurent(long c) { if (c != 0) terms_.emplace_back(0, GaussRat(c)); }
    HalfLaurent(const mpq_class& c) { if (sgn(c) != 0) terms_.emplace_back(0, GaussRat(c)); }
    HalfLaurent(const GaussRat& c) { if (!c.is_zero()) terms_.emplace_back(0, c); }

    static HalfLaurent monomial(int half_exp, const GaussRat& c = GaussRat(1)) {
        HalfLaurent h;
        if (!c.is_zero()) h.terms_.emplace_back(half_exp, c);
        return h;
    }

    // y^k for integer k
    static HalfLaurent y_pow(int k, const GaussRat& c = GaussRat(1)) { return monomial(2 * k, c); }

    // sum_i coeffs[i] * y^{lowest + i}
    template <typename C>
    static HalfLaurent from_y_coeffs(const std::vector<C>& coeffs, int lowest = 0) {
        HalfLaurent h;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            GaussRat g{mpq_class(coeffs[i])};
            if (!g.is_zero()) h.terms_.emplace_back(2 * (lowest + static_cast<int>(i)), std::move(g));
        }
        return h;
    }

    static HalfLaurent from_terms(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        HalfLaurent h;
        for (auto& t : terms) {
            if (!h.terms_.empty() && h.terms_.back().first == t.first) {
                h.terms_.back().second += t.second;
                if (h.terms_.back().second.is_zero()) h.terms_.pop_back();
            } else if (!t.second.is_zero()) {
                h.terms_.push_back(std::move(t));
            }
        }
        return h;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // lowest/highest exponent in half-units; undefined for zero
    int lo() const { return terms_.front().first; }
    int hi() const { return terms_.back().first; }

    GaussRat coeff(int half_exp) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), half_exp,
                                   [](const Term& t, int e) { return t.first < e; });
        if (it != terms_.end() && it->first == half_exp) return it->second;
        return GaussRat(0);
    }
    GaussRat y_coeff(int k) const { return coeff(2 * k); }

    bool is_real() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const Term& t) { return t.second.is_real(); });
    }
    bool has_integer_exponents() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const Term& t) { return t.first % 2 == 0; });
    }
    bool has_integer_coeffs() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const Term& t) { return t.second.is_integer(); });
    }
    bool is_monomial() const { return terms_.size() == 1; }

    GaussRat eval_at_one() const {
        GaussRat s(0);
        for (const auto& t : terms_) s += t.second;
        return s;
    }

    HalfLaurent shift(int half) const {
        HalfLaurent h = *this;
        for (auto& t : h.terms_) t.first += half;
        return h;
    }
    HalfLaurent shift_y(int k) const { return shift(2 * k); }

    HalfLaurent substitute_power(int k) const {
        if (k <= 0) throw std::invalid_argument("substitute_power: k must be positive");
        HalfLaurent h = *this;
        for (auto& t : h.terms_) t.first *= k;
        return h;
    }

    // y -> y^{-1}
    HalfLaurent invert_y() const {
        HalfLaurent h;
        h.terms_.reserve(terms_.size());
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
            h.terms_.emplace_back(-it->first, it->second);
        return h;
    }

    bool is_palindromic() const { return *this == invert_y(); }

    // invariant under y -> y^{-1} after recentring (lo + hi == 0)
    bool is_palindromic_up_to_shift() const {
        if (is_zero()) return true;
        if ((lo() + hi()) % 2 != 0) return false;
        return shift(-(lo() + hi()) / 2).is_palindromic();
    }

    HalfLaurent conj() const {
        HalfLaurent h = *this;
        for (auto& t : h.terms_) t.second = t.second.conj();
        return h;
    }

    HalfLaurent pow(unsigned n) const {
        HalfLaurent r(1), b = *this;
        while (n) {
            if (n & 1u) r *= b;
            n >>= 1u;
            if (n) b *= b;
        }
        return r;
    }

    HalfLaurent& operator+=(const HalfLaurent& o) { return *this = combine(*this, o, false); }
    HalfLaurent& operator-=(const HalfLaurent& o) { return *this = combine(*this, o, true); }
    HalfLaurent& operator*=(const HalfLaurent& o) { return *this = mul(*this, o); }
    HalfLaurent& operator*=(const GaussRat& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_) t.second *= c;
        return *this;
    }
    HalfLaurent& operator/=(const GaussRat& c) {
        for (auto& t : terms_) t.second /= c;
        return *this;
    }

    friend HalfLaurent operator+(const HalfLaurent& a, const HalfLaurent& b) { return combine(a, b, false); }
    friend HalfLaurent operator-(const HalfLaurent& a, const HalfLaurent& b) { return combine(a, b, true); }
    friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) { return mul(a, b); }
    friend HalfLaurent operator*(HalfLaurent a, const GaussRat& c) { return a *= c; }
    friend HalfLaurent operator*(const GaussRat& c, HalfLaurent a) { return a *= c; }
    friend HalfLaurent operator/(HalfLaurent a, const GaussRat& c) { return a /= c; }
    friend HalfLaurent operator-(const HalfLaurent& a) {
        HalfLaurent h = a;
        for (auto& t : h.terms_) t.second = -t.second;
        return h;
    }
    friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const HalfLaurent& a, const HalfLaurent& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.str();
            if (e != 0) {
                os << "*y^";
                if (e % 2 == 0) os << e / 2; else os << "(" << e << "/2)";
            }
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const HalfLaurent& h) { return os << h.str(); }

private:
    std::vector<Term> terms_;

    static HalfLaurent combine(const HalfLaurent& a, const HalfLaurent& b, bool subtract) {
        HalfLaurent r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
                r.terms_.emplace_back(b.terms_[j].first, subtract ? -b.terms_[j].second : b.terms_[j].second);
                ++j;
            } else {
                GaussRat c = subtract ? a.terms_[i].second - b.terms_[j].second
                                      : a.terms_[i].second + b.terms_[j].second;
                if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        return r;
    }

    static HalfLaurent mul(const HalfLaurent& a, const HalfLaurent& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (b.terms_.size() == 1) return mul_term(a, b.terms_[0]);
        if (a.terms_.size() == 1) return mul_term(b, a.terms_[0]);
        const int base = a.lo() + b.lo();
        std::vector<GaussRat> buf(static_cast<std::size_t>(a.hi() + b.hi() - base + 1));
        std::vector<char> used(buf.size(), 0);
        GaussRat tmp;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                std::size_t k = static_cast<std::size_t>(ea + eb - base);
                tmp = ca;
                tmp *= cb;
                buf[k] += tmp;
                used[k] = 1;
            }
        }
        HalfLaurent r;
        for (std::size_t k = 0; k < buf.size(); ++k)
            if (used[k] && !buf[k].is_zero()) r.terms_.emplace_back(static_cast<int>(k) + base, std::move(buf[k]));
        return r;
    }

    static HalfLaurent mul_term(const HalfLaurent& a, const Term& t) {
        HalfLaurent r = a;
        for (auto& x : r.terms_) {
            x.first += t.first;
            x.second *= t.second;
        }
        return r;
    }
};

/// Returns q with a == q * b, or throws NotDivisible.
inline HalfLaurent exact_div(const HalfLaurent& a, const HalfLaurent& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
    if (a.is_zero()) return {};
    if (b.is_monomial()) {
        const auto& [e, c] = b.terms()[0];
        return a.shift(-e) / c;
    }
    // dense long division on exponent offsets
    const int alo = a.lo(), blo = b.lo();
    const int na = a.hi() - alo + 1, nb = b.hi() - blo + 1;
    if (na < nb) throw NotDivisible("exact_div: degree span of divisor exceeds dividend");
    std::vector<GaussRat> A(static_cast<std::size_t>(na)), B(static_cast<std::size_t>(nb));
    for (const auto& [e, c] : a.terms()) A[static_cast<std::size_t>(e - alo)] = c;
    for (const auto& [e, c] : b.terms()) B[static_cast<std::size_t>(e - blo)] = c;
    const GaussRat lead = B.back();
    std::vector<HalfLaurent::Term> q;
    GaussRat tmp;
    for (int i = na - nb; i >= 0; --i) {
        GaussRat& top = A[static_cast<std::size_t>(i + nb - 1)];
        if (top.is_zero()) continue;
        GaussRat c = top / lead;
        for (int j = 0; j < nb; ++j) {
            if (B[static_cast<std::size_t>(j)].is_zero()) continue;
            tmp = c;
            tmp *= B[static_cast<std::size_t>(j)];
            A[static_cast<std::size_t>(i + j)] -= tmp;
        }
        q.emplace_back(i + alo - blo, std::move(c));
    }
    for (int i = 0; i < nb - 1; ++i)
        if (!A[static_cast<std::size_t>(i)].is_zero())
            throw NotDivisible("exact_div: nonzero remainder dividing " + a.str() + " by " + b.str());
    return HalfLaurent::from_terms(std::move(q));
}

/// y^{m/2} - y^{-m/2}
inline HalfLaurent half_diff(int m) {
    return HalfLaurent::monomial(m) - HalfLaurent::monomial(-m);
}

/// 2 sin(m hbar / 2) under y = e^{i hbar}; satisfies sin_factor(m) * i == y^{m/2} - y^{-m/2}.
inline HalfLaurent sin_factor(int m) {
    if (m == 0) throw std::invalid_argument("sin_factor: m must be nonzero");
    return half_diff(m) * GaussRat(mpq_class(0), mpq_class(-1));
}

/// [m] = (y^{m/2} - y^{-m/2}) / (y^{1/2} - y^{-1/2})
inline HalfLaurent quantum_integer(int m) {
    if (m < 1) throw std::invalid_argument("quantum_integer: m must be positive");
    std::vector<HalfLaurent::Term> t;
    for (int j = 0; j < m; ++j) t.emplace_back(-(m - 1) + 2 * j, GaussRat(1));
    return HalfLaurent::from_terms(std::move(t));
}

/// (y^{1/2} - y^{-1/2})^2 = y - 2 + y^{-1}
inline HalfLaurent u_factor() { return half_diff(1) * half_diff(1); }

}  // namespace p2omega
