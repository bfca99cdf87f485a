#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "half_laurent.hpp"

namespace p2omega {

/// Integer partition with weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }

    Partition transpose() const {
        Partition t;
        if (parts.empty()) return t;
        for (int c = 1; c <= parts.front(); ++c) {
            int len = 0;
            for (int p : parts) if (p >= c) ++len;
            t.parts.push_back(len);
        }
        return t;
    }

    // contents j - i of all boxes (0-based row i, column j)
    std::vector<int> contents() const {
        std::vector<int> out;
        for (int i = 0; i < length(); ++i)
            for (int j = 0; j < parts[static_cast<std::size_t>(i)]; ++j) out.push_back(j - i);
        return out;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

namespace detail {

inline void partitions_rec(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition{cur});
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

/// All partitions of n in lexicographically decreasing order; n = 0 gives the empty partition.
inline const std::vector<Partition>& partitions_of(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<Partition>>> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = memo[n];
    if (!slot) {
        slot = std::make_unique<std::vector<Partition>>();
        std::vector<int> cur;
        if (n >= 0) detail::partitions_rec(n, n, cur, *slot);
    }
    return *slot;
}

inline int content_sum(const Partition& rho) {
    int s = 0;
    for (int c : rho.contents()) s += c;
    return s;
}

/// sum_i (y^{m(rho_i - i + 1/2)} - y^{m(-i + 1/2)}) over the nonzero rows (1-based i).
inline HalfLaurent e_tilde(const Partition& rho, int m) {
    std::vector<HalfLaurent::Term> t;
    for (int i = 1; i <= rho.length(); ++i) {
        const int r = rho.parts[static_cast<std::size_t>(i - 1)];
        t.emplace_back(m * (2 * r - 2 * i + 1), GaussRat(1));
        t.emplace_back(m * (-2 * i + 1), GaussRat(-1));
    }
    return HalfLaurent::from_terms(std::move(t));
}

}  // namespace p2omega
