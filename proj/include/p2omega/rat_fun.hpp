#pragma once

#include <utility>
#include <vector>

#include "half_laurent.hpp"

namespace p2omega {

namespace detail {

// Dense polynomial in s = y^{1/2}, index = power of s.
using DensePoly = std::vector<GaussRat>;

inline DensePoly to_dense(const HalfLaurent& h) {
    DensePoly p;
    if (h.is_zero()) return p;
    p.resize(static_cast<std::size_t>(h.hi() - h.lo() + 1));
    for (const auto& [e, c] : h.terms()) p[static_cast<std::size_t>(e - h.lo())] = c;
    return p;
}

inline HalfLaurent from_dense(const DensePoly& p, int lo = 0) {
    std::vector<HalfLaurent::Term> t;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!p[i].is_zero()) t.emplace_back(static_cast<int>(i) + lo, p[i]);
    return HalfLaurent::from_terms(std::move(t));
}

inline void trim(DensePoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// remainder of a modulo b (b nonzero, trimmed)
inline DensePoly poly_rem(DensePoly a, const DensePoly& b) {
    trim(a);
    const std::size_t nb = b.size();
    while (a.size() >= nb && !a.empty()) {
        GaussRat c = a.back() / b.back();
        const std::size_t off = a.size() - nb;
        for (std::size_t j = 0; j < nb; ++j) a[off + j] -= c * b[j];
        a.pop_back();
        trim(a);
    }
    return a;
}

inline DensePoly make_monic(DensePoly p) {
    trim(p);
    if (p.empty()) return p;
    GaussRat lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

}  // namespace detail

/// Monic gcd of two Laurent polynomials, as a polynomial in y^{1/2} with nonzero constant term.
inline HalfLaurent poly_gcd(const HalfLaurent& a, const HalfLaurent& b) {
    using namespace detail;
    if (a.is_zero()) return b.is_zero() ? HalfLaurent(1) : from_dense(make_monic(to_dense(b)));
    if (b.is_zero()) return from_dense(make_monic(to_dense(a)));
    DensePoly x = make_monic(to_dense(a)), y = make_monic(to_dense(b));
    while (!y.empty()) {
        DensePoly r = make_monic(poly_rem(x, y));
        x = std::move(y);
        y = std::move(r);
    }
    return from_dense(x);
}

/// Reduced quotient num/den of half-Laurent polynomials.
///
/// Canonical form: gcd removed, the denominator is shifted so that its
/// exponent range is centred (lo + hi in {0, 1} half-units) and scaled so
/// that its lowest coefficient is 1.
class RatFun {
public:
    RatFun() : num_(), den_(1) {}
    RatFun(const HalfLaurent& n) : num_(n), den_(1) {}
    RatFun(long c) : num_(c), den_(1) {}
    RatFun(HalfLaurent n, HalfLaurent d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
        reduce();
    }

    const HalfLaurent& num() const { return num_; }
    const HalfLaurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_monomial(); }

    /// Clears the denominator, or throws NonPolynomialContribution when poles remain.
    HalfLaurent to_laurent() const {
        if (!den_.is_monomial())
            throw NonPolynomialContribution("RatFun has a non-monomial denominator: " + den_.str());
        const auto& [e, c] = den_.terms()[0];
        return num_.shift(-e) / c;
    }

    RatFun substitute_power(int k) const {
        return RatFun(num_.substitute_power(k), den_.substitute_power(k));
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator-(const RatFun& a) {
        RatFun r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    std::string str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

private:
    HalfLaurent num_;
    HalfLaurent den_;

    void reduce() {
        if (num_.is_zero()) {
            den_ = HalfLaurent(1);
            return;
        }
        if (!den_.is_monomial()) {
            try {
                num_ = exact_div(num_, den_);
                den_ = HalfLaurent(1);
            } catch (const NotDivisible&) {
                HalfLaurent g = poly_gcd(num_, den_);
                if (!(g == HalfLaurent(1))) {
                    num_ = exact_div(num_, g);
                    den_ = exact_div(den_, g);
                }
            }
        }
        const int s = -((den_.lo() + den_.hi()) >> 1);
        num_ = num_.shift(s);
        den_ = den_.shift(s);
        GaussRat c = den_.terms().front().second;
        num_ /= c;
        den_ /= c;
    }
};

}  // namespace p2omega
