#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "curveaut/errors.hpp"

namespace curveaut {

using Elt = std::uint16_t;  // element index; index 0 is always the identity

/// A finite group given by its full multiplication table. Orders relevant
/// here stay in the low hundreds, so dense O(n^2) storage keeps every search
/// cache-friendly and trivially copyable.
struct FiniteGroup {
    int order = 0;
    std::vector<Elt> mul;            // row-major: mul[a*order + b] = a*b
    std::vector<Elt> inverse;        // per-element inverse
    std::vector<int> element_order;  // least k >= 1 with g^k = e
    std::string label;
    std::optional<std::pair<int, int>> catalog_id;  // (order, index) when pinned

    int op(int a, int b) const { return mul[static_cast<std::size_t>(a) * order + b]; }
    int inv(int a) const { return inverse[a]; }

    int pow(int a, long long k) const {
        int n = element_order[a];
        k %= n;
        if (k < 0) k += n;
        int acc = 0;
        for (long long i = 0; i < k; ++i) acc = op(acc, a);
        return acc;
    }

    int conj(int g, int x) const { return op(op(g, x), inverse[g]); }
    int commutator(int a, int b) const { return op(op(a, b), op(inverse[a], inverse[b])); }

    bool is_abelian() const {
        for (int a = 0; a < order; ++a)
            for (int b = a + 1; b < order; ++b)
                if (op(a, b) != op(b, a)) return false;
        return true;
    }

    /// lcm of all element orders.
    int exponent() const {
        long long e = 1;
        for (int o : element_order) e = std::lcm(e, static_cast<long long>(o));
        return static_cast<int>(e);
    }

    std::vector<int> center() const {
        std::vector<int> z;
        for (int a = 0; a < order; ++a) {
            bool central = true;
            for (int b = 0; b < order && central; ++b)
                if (op(a, b) != op(b, a)) central = false;
            if (central) z.push_back(a);
        }
        return z;
    }

    /// Distinct element orders, ascending.
    std::vector<int> order_spectrum() const {
        std::set<int> s(element_order.begin(), element_order.end());
        return {s.begin(), s.end()};
    }
};

inline std::vector<int> compute_element_orders(int n, const std::vector<Elt>& mul) {
    std::vector<int> eo(n, 0);
    for (int a = 0; a < n; ++a) {
        int x = a, k = 1;
        while (x != 0) {
            x = mul[static_cast<std::size_t>(x) * n + a];
            ++k;
            if (k > n + 1) throw data_error("element order exceeds group order; table is not a group");
        }
        eo[a] = a == 0 ? 1 : k;
    }
    return eo;
}

/// Assemble a FiniteGroup from a raw multiplication table. Checks only the
/// cheap structural facts (identity and inverses); run group_axioms_ok for
/// the full scan.
inline FiniteGroup make_group(int n, std::vector<Elt> mul, std::string label) {
    if (n <= 0) throw parameter_error("group order must be positive");
    if (static_cast<int>(mul.size()) != n * n) throw data_error("multiplication table has wrong size");
    FiniteGroup g;
    g.order = n;
    g.mul = std::move(mul);
    g.label = std::move(label);
    g.inverse.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        if (g.op(0, a) != a || g.op(a, 0) != a)
            throw data_error("index 0 is not a two-sided identity in group " + g.label);
        bool found = false;
        for (int b = 0; b < n; ++b) {
            if (g.op(a, b) == 0 && g.op(b, a) == 0) {
                g.inverse[a] = static_cast<Elt>(b);
                found = true;
                break;
            }
        }
        if (!found) throw data_error("element without two-sided inverse in group " + g.label);
    }
    g.element_order = compute_element_orders(n, g.mul);
    return g;
}

/// Full group-axiom scan. Associativity is checked on all |G|^3 triples up
/// to order 128 and on 1e5 deterministically seeded random triples above
/// that (identity and inverse scans stay exhaustive).
inline bool group_axioms_ok(const FiniteGroup& g, std::string* why = nullptr) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    int n = g.order;
    for (int a = 0; a < n; ++a) {
        if (g.op(0, a) != a || g.op(a, 0) != a) return fail("identity axiom fails at " + std::to_string(a));
        if (g.op(a, g.inv(a)) != 0 || g.op(g.inv(a), a) != 0)
            return fail("inverse axiom fails at " + std::to_string(a));
    }
    // every row and column must be a permutation
    for (int a = 0; a < n; ++a) {
        std::vector<bool> seen_r(n, false), seen_c(n, false);
        for (int b = 0; b < n; ++b) {
            int r = g.op(a, b), c = g.op(b, a);
            if (r >= n || c >= n) return fail("table entry out of range");
            if (seen_r[r] || seen_c[c]) return fail("row/column not a permutation at " + std::to_string(a));
            seen_r[r] = seen_c[c] = true;
        }
    }
    if (n <= 128) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
                        return fail("associativity fails");
    } else {
        std::mt19937 rng(0x5eed5u);  // fixed seed: outputs must be reproducible
        std::uniform_int_distribution<int> d(0, n - 1);
        for (int i = 0; i < 100000; ++i) {
            int a = d(rng), b = d(rng), c = d(rng);
            if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c))) return fail("associativity fails");
        }
    }
    for (int a = 0; a < n; ++a) {
        int x = a, k = 1;
        while (x != 0) { x = g.op(x, a); ++k; }
        if (k != g.element_order[a] && !(a == 0 && g.element_order[a] == 1))
            return fail("element_order wrong at " + std::to_string(a));
    }
    if (g.element_order[0] != 1) return fail("identity must have order 1");
    return true;
}

/// Subgroup generated by `gens`, as a sorted element list.
inline std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<bool> in(g.order, false);
    in[0] = true;
    std::vector<int> members{0};
    for (int x : gens)
        if (!in[x]) { in[x] = true; members.push_back(x); }
    // multiply frontier elements by all members (both sides via closure) until stable
    std::size_t processed = 0;
    while (processed < members.size()) {
        int x = members[processed++];
        for (std::size_t j = 0; j < members.size(); ++j) {
            int p = g.op(x, members[j]);
            if (!in[p]) { in[p] = true; members.push_back(p); }
            int q = g.op(members[j], x);
            if (!in[q]) { in[q] = true; members.push_back(q); }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

inline bool generates_whole_group(const FiniteGroup& g, const std::vector<int>& gens) {
    return static_cast<int>(generated_subgroup(g, gens).size()) == g.order;
}

/// Greedy minimal-ish generating set: repeatedly adjoin the smallest element
/// outside the current closure. Deterministic.
inline std::vector<int> small_generating_set(const FiniteGroup& g) {
    std::vector<int> gens;
    std::vector<int> closure{0};
    while (static_cast<int>(closure.size()) < g.order) {
        int pick = -1;
        std::vector<bool> in(g.order, false);
        for (int x : closure) in[x] = true;
        for (int x = 1; x < g.order; ++x)
            if (!in[x]) { pick = x; break; }
        gens.push_back(pick);
        closure = generated_subgroup(g, gens);
    }
    return gens;
}

inline bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& sub) {
    std::vector<bool> in(g.order, false);
    for (int x : sub) in[x] = true;
    for (int a = 0; a < g.order; ++a)
        for (int x : sub)
            if (!in[g.conj(a, x)]) return false;
    return true;
}

/// Quotient G/N by a normal subgroup, with the coset map returned through
/// `coset_of` (element index -> quotient element index).
inline FiniteGroup quotient_group(const FiniteGroup& g, const std::vector<int>& normal_sub,
                                  std::vector<int>* coset_of = nullptr, std::string label = "") {
    if (!is_normal_subgroup(g, normal_sub))
        throw parameter_error("quotient_group: designated subgroup is not normal");
    int n = g.order;
    std::vector<int> rep(n, -1);  // element -> canonical coset representative (smallest member)
    for (int a = 0; a < n; ++a) {
        if (rep[a] != -1) continue;
        std::vector<int> coset;
        for (int x : normal_sub) coset.push_back(g.op(a, x));
        int least = *std::min_element(coset.begin(), coset.end());
        for (int y : coset) rep[y] = least;
    }
    std::vector<int> reps;
    for (int a = 0; a < n; ++a)
        if (rep[a] == a) reps.push_back(a);
    std::sort(reps.begin(), reps.end());
    // identity coset must come first; reps are sorted and rep(e)=min(N) need not be 0's slot
    // but e's coset representative is min(N) which contains 0 => rep[0] is the identity coset.
    int e_rep = rep[0];
    std::vector<int> order_of_rep;
    order_of_rep.push_back(e_rep);
    for (int r : reps)
        if (r != e_rep) order_of_rep.push_back(r);
    std::map<int, int> index_of;
    for (std::size_t i = 0; i < order_of_rep.size(); ++i) index_of[order_of_rep[i]] = static_cast<int>(i);
    int q = static_cast<int>(order_of_rep.size());
    std::vector<Elt> mul(static_cast<std::size_t>(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            mul[static_cast<std::size_t>(i) * q + j] =
                static_cast<Elt>(index_of.at(rep[g.op(order_of_rep[i], order_of_rep[j])]));
    if (coset_of) {
        coset_of->assign(n, 0);
        for (int a = 0; a < n; ++a) (*coset_of)[a] = index_of.at(rep[a]);
    }
    if (label.empty()) label = g.label + "/N" + std::to_string(normal_sub.size());
    return make_group(q, std::move(mul), std::move(label));
}

/// Subgroup of G on the given (closed) element set, reindexed to its own table.
/// `embed` maps new indices back into G.
inline FiniteGroup subgroup_as_group(const FiniteGroup& g, const std::vector<int>& members,
                                     std::vector<int>* embed = nullptr, std::string label = "") {
    std::vector<int> elts = members;
    std::sort(elts.begin(), elts.end());
    if (elts.empty() || elts.front() != 0)
        throw parameter_error("subgroup_as_group: set must contain the identity");
    std::map<int, int> idx;
    for (std::size_t i = 0; i < elts.size(); ++i) idx[elts[i]] = static_cast<int>(i);
    int m = static_cast<int>(elts.size());
    std::vector<Elt> mul(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            auto it = idx.find(g.op(elts[i], elts[j]));
            if (it == idx.end()) throw parameter_error("subgroup_as_group: set is not closed");
            mul[static_cast<std::size_t>(i) * m + j] = static_cast<Elt>(it->second);
        }
    if (embed) *embed = elts;
    if (label.empty()) label = g.label + "_sub" + std::to_string(m);
    return make_group(m, std::move(mul), std::move(label));
}

}  // namespace curveaut
