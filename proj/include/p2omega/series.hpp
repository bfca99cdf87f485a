#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace p2omega {

/// Truncated power series in one variable (y) or two variables (q, t).
///
/// Truncation is by total degree: every stored monomial has degree <= order.
/// Arithmetic between series truncates to the smaller order.
class TwoVarSeries {
public:
    TwoVarSeries() : TwoVarSeries(1, 0) {}
    TwoVarSeries(int nvars, int order) : nvars_(nvars), order_(order) {
        if (nvars != 1 && nvars != 2) throw std::invalid_argument("TwoVarSeries: nvars must be 1 or 2");
        if (order < 0) throw std::invalid_argument("TwoVarSeries: negative order");
        c_.assign(static_cast<std::size_t>(nvars == 1 ? order + 1 : (order + 1) * (order + 1)), mpq_class(0));
    }

    static TwoVarSeries one(int nvars, int order) {
        TwoVarSeries s(nvars, order);
        s.c_[0] = 1;
        return s;
    }
    static TwoVarSeries monomial(int nvars, int order, int i, int j = 0, const mpq_class& c = 1) {
        TwoVarSeries s(nvars, order);
        if (i + j <= order) s.at(i, j) = c;
        return s;
    }
    // sum_i coeffs[i] y^i
    template <typename C>
    static TwoVarSeries from_poly(const std::vector<C>& coeffs, int order) {
        TwoVarSeries s(1, order);
        for (std::size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= order; ++i) s.c_[i] = mpq_class(coeffs[i]);
        return s;
    }

    int nvars() const { return nvars_; }
    int order() const { return order_; }

    mpq_class coeff(int i, int j = 0) const {
        if (i < 0 || j < 0 || i + j > order_) return 0;
        return c_[idx(i, j)];
    }
    mpq_class& at(int i, int j = 0) {
        if (i < 0 || j < 0 || i + j > order_) throw std::out_of_range("TwoVarSeries: index beyond order");
        return c_[idx(i, j)];
    }

    bool is_zero() const {
        for (const auto& x : c_) if (sgn(x) != 0) return false;
        return true;
    }

    TwoVarSeries truncate(int order) const {
        if (order > order_) throw std::invalid_argument("TwoVarSeries: cannot raise order");
        TwoVarSeries r(nvars_, order);
        for_each_index(order, [&](int i, int j) { r.at(i, j) = coeff(i, j); });
        return r;
    }

    TwoVarSeries& operator+=(const TwoVarSeries& o) { return *this = *this + o; }
    TwoVarSeries& operator-=(const TwoVarSeries& o) { return *this = *this - o; }
    TwoVarSeries& operator*=(const TwoVarSeries& o) { return *this = *this * o; }
    TwoVarSeries& operator*=(const mpq_class& k) {
        for (auto& x : c_) x *= k;
        return *this;
    }

    friend TwoVarSeries operator+(const TwoVarSeries& a, const TwoVarSeries& b) { return lin(a, b, 1); }
    friend TwoVarSeries operator-(const TwoVarSeries& a, const TwoVarSeries& b) { return lin(a, b, -1); }
    friend TwoVarSeries operator-(const TwoVarSeries& a) {
        TwoVarSeries r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend TwoVarSeries operator*(TwoVarSeries a, const mpq_class& k) { return a *= k; }
    friend TwoVarSeries operator*(const mpq_class& k, TwoVarSeries a) { return a *= k; }
    friend TwoVarSeries operator*(const TwoVarSeries& a, const TwoVarSeries& b) {
        check_compat(a, b);
        const int n = std::min(a.order_, b.order_);
        TwoVarSeries r(a.nvars_, n);
        if (a.nvars_ == 1) {
            for (int i = 0; i <= n; ++i) {
                if (sgn(a.c_[i]) == 0) continue;
                for (int k = 0; i + k <= n; ++k)
                    if (sgn(b.c_[k]) != 0) r.c_[i + k] += a.c_[i] * b.c_[k];
            }
            return r;
        }
        for (int i1 = 0; i1 <= n; ++i1)
            for (int j1 = 0; i1 + j1 <= n; ++j1) {
                const mpq_class& x = a.c_[a.idx(i1, j1)];
                if (sgn(x) == 0) continue;
                for (int i2 = 0; i1 + j1 + i2 <= n; ++i2)
                    for (int j2 = 0; i1 + j1 + i2 + j2 <= n; ++j2) {
                        const mpq_class& z = b.c_[b.idx(i2, j2)];
                        if (sgn(z) != 0) r.c_[r.idx(i1 + i2, j1 + j2)] += x * z;
                    }
            }
        return r;
    }
    friend bool operator==(const TwoVarSeries& a, const TwoVarSeries& b) {
        return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.c_ == b.c_;
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    TwoVarSeries inverse() const {
        if (sgn(c_[0]) == 0) throw std::domain_error("TwoVarSeries: inverse of series with zero constant term");
        TwoVarSeries r(nvars_, order_);
        const mpq_class c0inv = 1 / c_[0];
        r.c_[0] = c0inv;
        for (int deg = 1; deg <= order_; ++deg) {
            for_each_of_degree(deg, [&](int i, int j) {
                mpq_class acc = 0;
                for (int a = 0; a <= i; ++a)
                    for (int b = 0; b <= j; ++b) {
                        if (a == 0 && b == 0) continue;
                        const mpq_class& x = c_[idx(a, b)];
                        if (sgn(x) != 0) acc += x * r.c_[idx(i - a, j - b)];
                    }
                r.c_[idx(i, j)] = -acc * c0inv;
            });
        }
        return r;
    }

    friend TwoVarSeries operator/(const TwoVarSeries& a, const TwoVarSeries& b) { return a * b.inverse(); }

    /// Multiply by y^i (or q^i t^j), dropping what falls beyond the order.
    TwoVarSeries shift(int i, int j = 0) const {
        TwoVarSeries r(nvars_, order_);
        for_each_index(order_, [&](int a, int b) {
            if (a + i >= 0 && b + j >= 0 && a + b + i + j <= order_) r.at(a + i, b + j) = coeff(a, b);
            else if (sgn(coeff(a, b)) != 0 && (a + i < 0 || b + j < 0))
                throw std::domain_error("TwoVarSeries: shift produces negative exponent");
        });
        return r;
    }

    /// y -> y^k (or q -> q^k, t -> t^k).
    TwoVarSeries substitute_power(int k) const {
        if (k <= 0) throw std::invalid_argument("substitute_power: k must be positive");
        TwoVarSeries r(nvars_, order_);
        for_each_index(order_, [&](int a, int b) {
            if (k * (a + b) <= order_) r.at(k * a, k * b) = coeff(a, b);
        });
        return r;
    }

    /// q = t = s: two-variable series to a one-variable series in s (same order).
    TwoVarSeries diagonal() const {
        if (nvars_ != 2) throw std::logic_error("diagonal: needs a two-variable series");
        TwoVarSeries r(1, order_);
        for_each_index(order_, [&](int a, int b) { r.c_[a + b] += coeff(a, b); });
        return r;
    }

    /// One-variable series in y rewritten in s with y = s^2 (order doubles).
    TwoVarSeries stretch2() const {
        if (nvars_ != 1) throw std::logic_error("stretch2: needs a one-variable series");
        TwoVarSeries r(1, 2 * order_);
        for (int i = 0; i <= order_; ++i) r.c_[2 * i] = c_[i];
        return r;
    }

    /// First total degree < upto where the two series differ, if any.
    std::optional<int> first_mismatch(const TwoVarSeries& o, int upto) const {
        check_compat(*this, o);
        for (int deg = 0; deg < upto; ++deg) {
            bool bad = false;
            for_each_of_degree(deg, [&](int i, int j) {
                if (coeff(i, j) != o.coeff(i, j)) bad = true;
            });
            if (bad) return deg;
        }
        return std::nullopt;
    }

    std::string str(int max_terms = 12) const {
        std::ostringstream os;
        int shown = 0;
        for_each_index(order_, [&](int i, int j) {
            if (sgn(coeff(i, j)) == 0 || shown >= max_terms) return;
            if (shown++) os << " + ";
            os << coeff(i, j);
            if (nvars_ == 1) os << "*y^" << i;
            else os << "*q^" << i << "*t^" << j;
        });
        if (!shown) os << "0";
        os << " + O(" << order_ + 1 << ")";
        return os.str();
    }

    template <typename F>
    void for_each_index(int order, F&& f) const {
        for (int deg = 0; deg <= order; ++deg) for_each_of_degree(deg, f);
    }
    template <typename F>
    void for_each_of_degree(int deg, F&& f) const {
        if (nvars_ == 1) {
            f(deg, 0);
            return;
        }
        for (int i = 0; i <= deg; ++i) f(i, deg - i);
    }

private:
    int nvars_;
    int order_;
    std::vector<mpq_class> c_;

    std::size_t idx(int i, int j) const {
        return nvars_ == 1 ? static_cast<std::size_t>(i) : static_cast<std::size_t>(i * (order_ + 1) + j);
    }
    static void check_compat(const TwoVarSeries& a, const TwoVarSeries& b) {
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("TwoVarSeries: variable count mismatch");
    }
    static TwoVarSeries lin(const TwoVarSeries& a, const TwoVarSeries& b, int sign) {
        check_compat(a, b);
        const int n = std::min(a.order_, b.order_);
        TwoVarSeries r(a.nvars_, n);
        r.for_each_index(n, [&](int i, int j) {
            r.at(i, j) = sign > 0 ? mpq_class(a.coeff(i, j) + b.coeff(i, j)) : mpq_class(a.coeff(i, j) - b.coeff(i, j));
        });
        return r;
    }
};

/// One factor (1 - c * y^i)^{power} or (1 - c * q^i t^j)^{power}.
struct ProductFactor {
    std::array<int, 2> exps{0, 0};
    int power = -1;
    mpq_class coeff = 1;
};

/// Truncated expansion of prod (1 - c m)^{power}; factors of degree > order are skipped.
inline TwoVarSeries product_expand(const std::vector<ProductFactor>& factors, int nvars, int order) {
    TwoVarSeries acc = TwoVarSeries::one(nvars, order);
    for (const auto& f : factors) {
        const int deg = f.exps[0] + (nvars == 2 ? f.exps[1] : 0);
        if (deg <= 0) throw std::invalid_argument("product_expand: factor monomial must have positive degree");
        if (deg > order) continue;
        TwoVarSeries base = TwoVarSeries::one(nvars, order) -
                            TwoVarSeries::monomial(nvars, order, f.exps[0], nvars == 2 ? f.exps[1] : 0, f.coeff);
        TwoVarSeries b = f.power < 0 ? base.inverse() : base;
        const int n = f.power < 0 ? -f.power : f.power;
        for (int k = 0; k < n; ++k) acc *= b;
    }
    return acc;
}

}  // namespace p2omega
