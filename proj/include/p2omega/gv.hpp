#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "rat_fun.hpp"

namespace p2omega {

/// Gopakumar-Vafa invariants n_{g,d} of local P^2.
class GVTable {
public:
    static int genus_bound(int d) { return (d - 1) * (d - 2) / 2; }

    void set(int g, int d, const mpz_class& n) {
        if (d < 1 || g < 0) throw std::invalid_argument("GVTable: bad index");
        if (g > genus_bound(d) && n != 0)
            throw std::invalid_argument("GVTable: n_{g,d} must vanish above g(d)");
        entries_[{d, g}] = n;
        rows_[d] = true;
    }
    bool has_row(int d) const { return rows_.count(d) != 0; }
    int max_degree() const { return rows_.empty() ? 0 : rows_.rbegin()->first; }
    mpz_class get(int g, int d) const {
        if (!has_row(d)) throw MissingGV("GV row d=" + std::to_string(d) + " missing");
        auto it = entries_.find({d, g});
        return it == entries_.end() ? mpz_class(0) : it->second;
    }
    std::vector<mpz_class> row(int d) const {
        std::vector<mpz_class> r;
        for (int g = 0; g <= genus_bound(d); ++g) r.push_back(get(g, d));
        return r;
    }
    friend bool operator==(const GVTable& a, const GVTable& b) {
        if (a.max_degree() != b.max_degree()) return false;
        for (int d = 1; d <= a.max_degree(); ++d) {
            if (a.has_row(d) != b.has_row(d)) return false;
            if (a.has_row(d) && a.row(d) != b.row(d)) return false;
        }
        return true;
    }

    /// Known values for d <= 6.
    static GVTable p2_bundled() {
        GVTable t;
        const std::vector<std::vector<long>> rows = {
            {3},
            {-6},
            {27, -10},
            {-192, 231, -102, 15},
            {1695, -4452, 5430, -3672, 1386, -270, 21},
            {-17064, 80948, -194022, 290853, -290400, 196857, -90390, 27538, -5310, 585, -28},
        };
        for (std::size_t d = 0; d < rows.size(); ++d)
            for (std::size_t g = 0; g < rows[d].size(); ++g)
                t.set(static_cast<int>(g), static_cast<int>(d + 1), rows[d][g]);
        return t;
    }

private:
    std::map<std::pair<int, int>, mpz_class> entries_;
    std::map<int, bool> rows_;
};

/// F_d(y) = sum_g n_{g,d} (-1)^g (y^{1/2} - y^{-1/2})^{2g}
inline HalfLaurent f_curly(int d, const GVTable& gv) {
    const HalfLaurent u = u_factor();
    HalfLaurent acc, up(1);
    for (int g = 0; g <= GVTable::genus_bound(d); ++g) {
        mpz_class n = gv.get(g, d);
        if (g % 2) n = -n;
        acc += up * GaussRat(mpq_class(n));
        up *= u;
    }
    return acc;
}

/// W_d as an unreduced pair (numerator, (y^{d/2} - y^{-d/2})^2).
inline std::pair<HalfLaurent, HalfLaurent> w_fraction(int d, const GVTable& gv) {
    HalfLaurent num;
    const HalfLaurent ad = half_diff(d);
    for (int k = 1; k <= d; ++k) {
        if (d % k) continue;
        HalfLaurent ratio = exact_div(ad, half_diff(k));
        num -= f_curly(d / k, gv).substitute_power(k) * ratio * ratio / GaussRat(k);
    }
    return {num, ad * ad};
}

/// W_d = sum_{k|d} -F_{d/k}(y^k) / (k (y^{k/2} - y^{-k/2})^2), reduced.
inline RatFun w_series(int d, const GVTable& gv) {
    auto [num, den] = w_fraction(d, gv);
    return RatFun(num, den);
}

}  // namespace p2omega
