#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "partitions.hpp"
#include "rat_fun.hpp"

namespace p2omega {

/// Multiset of marking intersection numbers, kept sorted.
using MarkingList = std::vector<int>;

inline MarkingList canonical(MarkingList ms) {
    std::sort(ms.begin(), ms.end());
    return ms;
}

/// Disconnected series: sum over |rho| = dE of (-1)^{k dE} y^{k c_rho} prod_i (-m_i) e~(rho, m_i) / i.
inline HalfLaurent f_disconnected(int dE, const MarkingList& ms, int k) {
    if (dE < 1) throw std::invalid_argument("f_disconnected: dE must be positive");
    HalfLaurent total;
    const GaussRat sign((k * dE) % 2 == 0 ? 1 : -1);
    for (const auto& rho : partitions_of(dE)) {
        HalfLaurent term = HalfLaurent::y_pow(k * content_sum(rho), sign);
        for (int m : ms) {
            // (-m) * (1/i) = m * i
            term *= e_tilde(rho, m) * GaussRat(mpq_class(0), mpq_class(m));
            if (term.is_zero()) break;
        }
        total += term;
    }
    return total;
}

/// Memoized connected series; safe for concurrent use.
class LocalCurveCache {
public:
    static LocalCurveCache& instance() {
        static LocalCurveCache c;
        return c;
    }

    /// Connected series for dE >= 1.
    HalfLaurent connected(int dE, const MarkingList& ms_in, int k) {
        if (dE < 1) throw std::invalid_argument("connected: dE must be positive");
        MarkingList ms = canonical(ms_in);
        Key key{k, dE, ms};
        {
            std::shared_lock lock(mu_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        HalfLaurent v = compute(dE, ms, k);
        std::unique_lock lock(mu_);
        memo_.emplace(std::move(key), v);
        return v;
    }

private:
    using Key = std::tuple<int, int, MarkingList>;
    std::shared_mutex mu_;
    std::map<Key, HalfLaurent> memo_;

    // F(0, S) contributes only through the disconnected base F*(0, {}) = 1
    static HalfLaurent disc(int d, const MarkingList& ms, int k) {
        if (d == 0) return ms.empty() ? HalfLaurent(1) : HalfLaurent();
        return f_disconnected(d, ms, k);
    }

    HalfLaurent compute(int dE, const MarkingList& ms, int k) {
        HalfLaurent acc = disc(dE, ms, k);
        if (ms.empty()) {
            // dE F(dE) = dE F*(dE) - sum_{e<dE} e F(e) F*(dE-e)
            acc *= GaussRat(dE);
            for (int e = 1; e < dE; ++e)
                acc -= connected(e, {}, k) * disc(dE - e, {}, k) * GaussRat(e);
            return acc / GaussRat(dE);
        }
        // split off the connected block containing slot 0
        const int n = static_cast<int>(ms.size());
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
            MarkingList in{ms[0]}, out;
            for (int s = 1; s < n; ++s) {
                if (mask & (1u << (s - 1))) in.push_back(ms[static_cast<std::size_t>(s)]);
                else out.push_back(ms[static_cast<std::size_t>(s)]);
            }
            for (int e = 1; e <= dE; ++e) {
                if (e == dE && out.empty()) continue;
                HalfLaurent rest = disc(dE - e, out, k);
                if (rest.is_zero()) continue;
                acc -= connected(e, in, k) * rest;
            }
        }
        return acc;
    }
};

/// Connected series; dE = 0 is the single-marking base case m i / (y^{m/2} - y^{-m/2}).
inline RatFun f_connected(int dE, const MarkingList& ms, int k) {
    if (dE == 0) {
        if (ms.empty()) throw std::invalid_argument("f_connected: (0, {}) is undefined");
        if (ms.size() > 1) return RatFun();
        return RatFun(HalfLaurent(GaussRat(mpq_class(0), mpq_class(ms[0]))), half_diff(ms[0]));
    }
    return RatFun(LocalCurveCache::instance().connected(dE, ms, k));
}

inline HalfLaurent f_connected_poly(int dE, const MarkingList& ms, int k) {
    return LocalCurveCache::instance().connected(dE, ms, k);
}

/// F* lies in prod_i ((y^{m_i/2} - y^{-m_i/2}) / i) * Q[y, y^{-1}].
inline bool check_divisibility(int dE, const MarkingList& ms, int k) {
    HalfLaurent f = f_disconnected(dE, ms, k);
    HalfLaurent den(1);
    GaussRat unit(1);
    for (int m : ms) {
        den *= half_diff(m);
        unit *= GaussRat::i();
    }
    try {
        HalfLaurent q = exact_div(f, den) * unit;
        return q.has_integer_exponents() && q.is_real();
    } catch (const NotDivisible&) {
        return false;
    }
}

/// Rebuilds F* from connected pieces by explicit enumeration of set partitions of the marking slots.
inline HalfLaurent reassemble_disconnected(int dE, const MarkingList& ms, int k) {
    const int n = static_cast<int>(ms.size());
    // F* restricted to empty-marking blocks: [x^d] exp(sum_e F(e, {}) x^e)
    auto empty_part = [&](int d) {
        HalfLaurent tot;
        for (const auto& lam : partitions_of(d)) {
            HalfLaurent t(1);
            std::map<int, int> mult;
            for (int p : lam.parts) {
                t *= f_connected_poly(p, {}, k);
                ++mult[p];
            }
            mpz_class aut = 1;
            for (auto [p, c] : mult)
                for (int j = 2; j <= c; ++j) aut *= j;
            tot += t / GaussRat(mpq_class(aut));
        }
        return tot;
    };
    HalfLaurent total;
    std::vector<int> block(static_cast<std::size_t>(n), 0);
    // restricted growth strings enumerate set partitions
    std::function<void(int, int)> rec = [&](int pos, int nblocks) {
        if (pos == n) {
            std::vector<MarkingList> blocks(static_cast<std::size_t>(nblocks));
            for (int s = 0; s < n; ++s) blocks[static_cast<std::size_t>(block[static_cast<std::size_t>(s)])].push_back(ms[static_cast<std::size_t>(s)]);
            std::function<void(int, int, HalfLaurent)> degs = [&](int b, int used, HalfLaurent acc) {
                if (b == nblocks) {
                    if (used <= dE) total += acc * empty_part(dE - used);
                    return;
                }
                for (int e = 1; used + e <= dE; ++e)
                    degs(b + 1, used + e, acc * f_connected_poly(e, blocks[static_cast<std::size_t>(b)], k));
            };
            degs(0, 0, HalfLaurent(1));
            return;
        }
        for (int b = 0; b <= nblocks; ++b) {
            block[static_cast<std::size_t>(pos)] = b;
            rec(pos + 1, std::max(nblocks, b + 1));
        }
    };
    rec(0, 0);
    return total;
}

}  // namespace p2omega
