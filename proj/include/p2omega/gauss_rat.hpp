#pragma once

#include <gmpxx.h>

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace p2omega {

// a + b*i with a, b rational.
struct GaussRat {
    mpq_class re;
    mpq_class im;

    GaussRat() = default;
    GaussRat(long v) : re(v), im(0) {}
    GaussRat(const mpq_class& r) : re(r), im(0) {}
    GaussRat(const mpz_class& r) : re(r), im(0) {}
    GaussRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    bool is_integer() const {
        return sgn(im) == 0 && re.get_den() == 1;
    }

    GaussRat conj() const { return GaussRat(re, -im); }

    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        if (sgn(o.im) != 0) im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        if (sgn(o.im) != 0) im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        if (sgn(im) == 0 && sgn(o.im) == 0) {
            re *= o.re;
            return *this;
        }
        mpq_class r = re * o.re - im * o.im;
        mpq_class j = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(j);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) {
        if (o.is_zero()) throw std::domain_error("GaussRat: division by zero");
        if (sgn(o.im) == 0) {
            re /= o.re;
            if (sgn(im) != 0) im /= o.re;
            return *this;
        }
        mpq_class n = o.re * o.re + o.im * o.im;
        GaussRat t = *this;
        t *= o.conj();
        re = t.re / n;
        im = t.im / n;
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re, -a.im); }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    std::string str() const {
        std::ostringstream os;
        if (sgn(im) == 0) {
            os << re;
        } else if (sgn(re) == 0) {
            os << im << "i";
        } else {
            os << "(" << re << (sgn(im) > 0 ? "+" : "") << im << "i)";
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const GaussRat& g) {
        return os << g.str();
    }
};

}  // namespace p2omega
