#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gv.hpp"
#include "local_curve.hpp"

namespace p2omega {

/// Labeled rooted tree for P^2 (curve classes are integers, [E] has degree 3).
///
/// Circles carry d0, squares carry d1 and are leaves. `edge` is the class
/// of the edge to the parent (0 at the root). Children are kept sorted by
/// their code, so isomorphic trees have identical codes.
struct TreeNode {
    bool circle = true;
    int label = 0;
    int edge = 0;
    std::vector<TreeNode> children;

    std::string code() const {
        if (!circle) return "S" + std::to_string(label);
        std::string s = "C" + std::to_string(label) + "(";
        for (std::size_t i = 0; i < children.size(); ++i) {
            if (i) s += ",";
            s += children[i].code();
        }
        return s + ")";
    }

    // class carried by the parent edge: d1 for a square, 3 d0 + sum of child edges for a circle
    int subtree_class() const {
        if (!circle) return label;
        int c = 3 * label;
        for (const auto& ch : children) c += ch.edge;
        return c;
    }

    int degree() const {
        int s = circle ? 3 * label : label;
        for (const auto& ch : children) s += ch.degree();
        return s;
    }
};

using LabeledRootedTree = TreeNode;

namespace detail {

class TreePool {
public:
    explicit TreePool(int max_class) {
        for (int m = 1; m <= max_class; ++m) grow(m);
    }
    const std::vector<TreeNode>& nodes() const { return nodes_; }

    // all nondecreasing index sequences over pool entries with classes summing to target
    void multisets(int target, const std::function<void(const std::vector<int>&)>& f) const {
        std::vector<int> cur;
        std::function<void(int, std::size_t)> rec = [&](int rem, std::size_t from) {
            if (rem == 0) {
                f(cur);
                return;
            }
            for (std::size_t i = from; i < nodes_.size(); ++i) {
                const int c = nodes_[i].edge;
                if (c > rem) continue;
                cur.push_back(static_cast<int>(i));
                rec(rem - c, i);
                cur.pop_back();
            }
        };
        rec(target, 0);
    }

    TreeNode circle_with(int d0, const std::vector<int>& idx, int edge) const {
        TreeNode n;
        n.circle = true;
        n.label = d0;
        n.edge = edge;
        for (int i : idx) n.children.push_back(nodes_[static_cast<std::size_t>(i)]);
        std::sort(n.children.begin(), n.children.end(),
                  [](const TreeNode& a, const TreeNode& b) { return a.code() < b.code(); });
        return n;
    }

private:
    std::vector<TreeNode> nodes_;

    void grow(int m) {
        std::vector<TreeNode> fresh;
        TreeNode sq;
        sq.circle = false;
        sq.label = m;
        sq.edge = m;
        fresh.push_back(sq);
        for (int d0 = 1; 3 * d0 <= m; ++d0)
            multisets(m - 3 * d0, [&](const std::vector<int>& idx) { fresh.push_back(circle_with(d0, idx, m)); });
        for (auto& n : fresh) nodes_.push_back(std::move(n));
    }
};

}  // namespace detail

/// One representative per isomorphism class of degree-d trees whose root is a circle.
inline std::vector<LabeledRootedTree> enumerate_trees(int d) {
    std::vector<LabeledRootedTree> out;
    if (d < 3) return out;
    detail::TreePool pool(d - 3);
    for (int d0 = 1; 3 * d0 <= d; ++d0)
        pool.multisets(d - 3 * d0, [&](const std::vector<int>& idx) { out.push_back(pool.circle_with(d0, idx, 0)); });
    return out;
}

/// |Aut T|: product over vertices of factorials of identical-child multiplicities.
inline mpz_class aut_order(const LabeledRootedTree& t) {
    mpz_class a = 1;
    std::map<std::string, int> mult;
    for (const auto& ch : t.children) {
        a *= aut_order(ch);
        ++mult[ch.code()];
    }
    for (const auto& [code, c] : mult)
        for (int j = 2; j <= c; ++j) a *= j;
    return a;
}

/// Checks the labelling rules: squares are leaves, edge classes balance at every vertex.
inline bool tree_is_balanced(const LabeledRootedTree& t, bool is_root = true) {
    if (!t.circle) return t.children.empty() && !is_root && t.edge == t.label && t.label > 0;
    if (t.label < 1) return false;
    if (!is_root && t.edge != t.subtree_class()) return false;
    for (const auto& ch : t.children) {
        if (ch.edge < 1 || !tree_is_balanced(ch, false)) return false;
    }
    return true;
}

namespace detail {

struct Fraction {
    HalfLaurent num;
    HalfLaurent den;
};

// value of a subtree including the sin factor of its parent edge (when not the root)
inline Fraction tree_value(const TreeNode& t, const GVTable& gv) {
    Fraction f;
    if (!t.circle) {
        auto [n, d] = w_fraction(t.label, gv);
        f.num = std::move(n);
        f.den = std::move(d);
    } else {
        MarkingList ms;
        for (const auto& ch : t.children) ms.push_back(3 * ch.edge);
        f.num = -f_connected_poly(t.label, ms, 9);
        f.den = HalfLaurent(1);
        for (const auto& ch : t.children) {
            Fraction c = tree_value(ch, gv);
            f.num *= c.num;
            f.den *= c.den;
        }
    }
    if (t.edge > 0) f.num *= sin_factor(3 * t.edge) / GaussRat(3 * t.edge);
    return f;
}

}  // namespace detail

/// Cont_T as a Laurent polynomial; throws NonPolynomialContribution if poles survive.
inline HalfLaurent contribution(const LabeledRootedTree& t, const GVTable& gv) {
    detail::Fraction f = detail::tree_value(t, gv);
    HalfLaurent v;
    try {
        v = exact_div(f.num, f.den);
    } catch (const NotDivisible&) {
        throw NonPolynomialContribution("contribution of " + t.code() + " has poles");
    }
    v /= GaussRat(mpq_class(aut_order(t)));
    if (!v.is_real() || !v.has_integer_exponents())
        throw NonPolynomialContribution("contribution of " + t.code() + " is not a real Laurent polynomial in y");
    return v;
}

/// Sum of Cont_T over trees of degree d with at least one circle.
inline HalfLaurent rhs_tree_sum(int d, const GVTable& gv) {
    HalfLaurent s;
    for (const auto& t : enumerate_trees(d)) s += contribution(t, gv);
    return s;
}

}  // namespace p2omega
