#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curveaut/character.hpp"
#include "curveaut/conjugacy.hpp"
#include "curveaut/errors.hpp"
#include "curveaut/generating_vector.hpp"
#include "curveaut/group.hpp"
#include "curveaut/morphisms.hpp"
#include "curveaut/riemann_hurwitz.hpp"
#include "curveaut/signature.hpp"
#include "curveaut/subgroups.hpp"

namespace curveaut {

inline constexpr std::uint64_t kDefaultSearchNodeCap = 100'000'000;

struct SearchOutcome {
    std::optional<GeneratingVector> witness;
    bool exhausted = true;  // false when the node cap stopped the search
    std::uint64_t nodes = 0;

    bool found() const { return witness.has_value(); }
};

namespace search_detail {

/// Elements of each exact order, grouped once per group.
inline std::map<int, std::vector<int>> elements_by_order(const FiniteGroup& g) {
    std::map<int, std::vector<int>> m;
    for (int x = 0; x < g.order; ++x) m[g.element_order[x]].push_back(x);
    return m;
}

}  // namespace search_detail

/// Exhaustive backtracking search for one generating vector. Absence is a
/// definitive value when `exhausted` is true; the pruning (forced last
/// elliptic entry, conjugation normalization of the first chosen entry)
/// never discards a valid vector. Signatures that are not hyperbolic or
/// whose RH genus is not an integer >= 2 admit no surface-kernel action and
/// return absence immediately.
inline SearchOutcome find_generating_vector(const FiniteGroup& g, const Signature& sig,
                                            std::uint64_t node_cap = kDefaultSearchNodeCap) {
    SearchOutcome out;
    Rat genus = rh_genus(sig, g.order);
    if (!genus.is_integer() || genus.as_integer() < 2) return out;

    auto pools = search_detail::elements_by_order(g);
    // periods sorted descending: scarce large orders first
    std::vector<int> periods = sig.periods;
    std::sort(periods.rbegin(), periods.rend());
    for (int m : periods)
        if (!pools.count(m)) return out;  // no element of that order

    int g0 = sig.orbit_genus;
    int r = static_cast<int>(periods.size());
    auto cc = conjugacy_classes(g);

    GeneratingVector v;
    v.signature = Signature(g0, periods);
    v.hyperbolic_part.assign(2 * g0, 0);
    v.elliptic_part.assign(r, 0);

    // choose hyperbolic entries, then elliptic entries with the last forced
    bool stop = false;
    auto finish = [&](int prod) -> bool {
        // prod = product of all commitments so far; the last elliptic entry
        // (when r > 0) must be prod^-1 with the right order
        if (r > 0) {
            int last = g.inv(prod);
            if (g.element_order[last] != periods[r - 1]) return false;
            v.elliptic_part[r - 1] = last;
        } else if (prod != 0) {
            return false;
        }
        if (!generates_whole_group(g, v.all_entries())) return false;
        out.witness = v;
        return true;
    };

    auto rec_elliptic = [&](auto&& self, int j, int prod) -> void {
        if (stop) return;
        if (j == r - 1 || r == 0) {
            if (finish(prod)) stop = true;
            return;
        }
        bool first_choice = g0 == 0 && j == 0;
        const auto& pool = pools.at(periods[j]);
        for (int c : pool) {
            // normalize the very first chosen entry to class representatives
            if (first_choice && cc.representatives[cc.class_of[c]] != c) continue;
            if (++out.nodes > node_cap) {
                out.exhausted = false;
                stop = true;
                return;
            }
            v.elliptic_part[j] = c;
            self(self, j + 1, g.op(prod, c));
            if (stop) return;
        }
    };

    auto rec_hyperbolic = [&](auto&& self, int i) -> void {
        if (stop) return;
        if (i == 2 * g0) {
            int prod = 0;
            for (int t = 0; t < g0; ++t)
                prod = g.op(prod, g.commutator(v.hyperbolic_part[2 * t], v.hyperbolic_part[2 * t + 1]));
            rec_elliptic(rec_elliptic, 0, prod);
            return;
        }
        for (int x = 0; x < g.order; ++x) {
            if (i == 0 && cc.representatives[cc.class_of[x]] != x) continue;  // conjugation symmetry
            if (++out.nodes > node_cap) {
                out.exhausted = false;
                stop = true;
                return;
            }
            v.hyperbolic_part[i] = x;
            self(self, i + 1);
            if (stop) return;
        }
    };

    rec_hyperbolic(rec_hyperbolic, 0);
    if (out.witness) out.exhausted = true;
    return out;
}

/// Every generating vector with the periods in the exact order given by
/// `sig` (no canonicalization, no symmetry folding). Used by the maximality
/// analysis, which must examine each witness.
inline std::vector<GeneratingVector> enumerate_generating_vectors(
    const FiniteGroup& g, const Signature& sig, std::uint64_t node_cap = kDefaultSearchNodeCap,
    bool* exhausted = nullptr) {
    std::vector<GeneratingVector> found;
    if (exhausted) *exhausted = true;
    Rat genus = rh_genus(sig, g.order);
    if (!genus.is_integer() || genus.as_integer() < 2) return found;
    auto pools = search_detail::elements_by_order(g);
    for (int m : sig.periods)
        if (!pools.count(m)) return found;

    int g0 = sig.orbit_genus;
    int r = sig.r();
    GeneratingVector v;
    v.signature = sig;
    v.hyperbolic_part.assign(2 * g0, 0);
    v.elliptic_part.assign(r, 0);
    std::uint64_t nodes = 0;
    bool stop = false;

    auto try_finish = [&](int prod) {
        if (r > 0) {
            int last = g.inv(prod);
            if (g.element_order[last] != sig.periods[r - 1]) return;
            v.elliptic_part[r - 1] = last;
        } else if (prod != 0) {
            return;
        }
        if (generates_whole_group(g, v.all_entries())) found.push_back(v);
    };

    auto rec_elliptic = [&](auto&& self, int j, int prod) -> void {
        if (stop) return;
        if (j == r - 1 || r == 0) {
            try_finish(prod);
            return;
        }
        for (int c : pools.at(sig.periods[j])) {
            if (++nodes > node_cap) {
                stop = true;
                if (exhausted) *exhausted = false;
                return;
            }
            v.elliptic_part[j] = c;
            self(self, j + 1, g.op(prod, c));
            if (stop) return;
        }
    };

    auto rec_hyperbolic = [&](auto&& self, int i) -> void {
        if (stop) return;
        if (i == 2 * g0) {
            int prod = 0;
            for (int t = 0; t < g0; ++t)
                prod = g.op(prod, g.commutator(v.hyperbolic_part[2 * t], v.hyperbolic_part[2 * t + 1]));
            rec_elliptic(rec_elliptic, 0, prod);
            return;
        }
        for (int x = 0; x < g.order; ++x) {
            if (++nodes > node_cap) {
                stop = true;
                if (exhausted) *exhausted = false;
                return;
            }
            v.hyperbolic_part[i] = x;
            self(self, i + 1);
            if (stop) return;
        }
    };

    rec_hyperbolic(rec_hyperbolic, 0);
    return found;
}

// ---------------------------------------------------------------------------
// counting

namespace search_detail {

/// Count tuples (c_1, ..., c_r) drawn from `pool_of_order` with
/// order(c_j) = m_j and product = identity. Surjectivity is NOT required.
/// Folds the first entry over conjugacy classes: the count for fixed c_1
/// depends only on its class.
inline long long count_product_one_tuples(const FiniteGroup& g, const std::vector<int>& periods,
                                          const std::map<int, std::vector<int>>& pools,
                                          std::uint64_t cost_cap) {
    int r = static_cast<int>(periods.size());
    if (r == 0) return 1;
    for (int m : periods)
        if (!pools.count(m)) return 0;
    // cost estimate: product of pool sizes over entries 1..r-2 (free entries)
    long double est = 1;
    for (int j = 0; j + 1 < r && j < r; ++j) est *= pools.at(periods[j]).size();
    if (est > static_cast<long double>(cost_cap))
        throw resource_error("count_product_one_tuples: estimated cost exceeds cap of " +
                             std::to_string(cost_cap));
    auto cc = conjugacy_classes(g);
    long long total = 0;
    std::vector<int> current(r, 0);
    auto rec = [&](auto&& self, int j, int prod, long long weight) -> void {
        if (j == r - 1) {
            int last = g.inv(prod);
            if (g.element_order[last] == periods[r - 1]) total += weight;
            return;
        }
        if (j == 0) {
            for (int c : pools.at(periods[0])) {
                if (cc.representatives[cc.class_of[c]] != c) continue;
                self(self, 1, c, weight * cc.sizes[cc.class_of[c]]);
            }
            return;
        }
        for (int c : pools.at(periods[j])) self(self, j + 1, g.op(prod, c), weight);
    };
    if (r == 1) {
        // single entry must be the identity-product element of the right order
        return 0;  // order >= 2 and c_1 = identity is impossible
    }
    rec(rec, 0, 0, 1);
    return total;
}

}  // namespace search_detail

/// Number of torsion-free-kernel homomorphisms from the genus-0 Fuchsian
/// group with the given periods (tuples with exact orders and product one;
/// surjectivity not required).
inline long long count_torsion_free_homs(const FiniteGroup& g, const Signature& sig,
                                         std::uint64_t cost_cap = kDefaultSearchNodeCap) {
    if (sig.orbit_genus != 0)
        throw parameter_error("count_torsion_free_homs: only genus-0 signatures are counted");
    auto pools = search_detail::elements_by_order(g);
    return search_detail::count_product_one_tuples(g, sig.periods, pools, cost_cap);
}

/// Same count through the character-sum formula for triangle signatures:
///   (1/|G|) sum_chi chi(1)^-1 [sum_{x in L1} chi(x)][...][...]
/// with L_i the union of classes of elements of order m_i. Exact cyclotomic
/// arithmetic; a non-integer result means the ingested table is wrong.
inline long long count_torsion_free_homs_character(const FiniteGroup& g, const CharacterTable& t,
                                                   const Signature& sig) {
    if (sig.orbit_genus != 0 || sig.r() != 3)
        throw parameter_error("character counting applies to triangle signatures (0; m1, m2, m3)");
    if (t.group_order != g.order)
        throw data_error("character table order does not match the group");
    Cyclotomic total(t.exponent);
    for (std::size_t row = 0; row < t.rows.size(); ++row) {
        Cyclotomic term(t.exponent, Rat(1, t.degrees[row]));
        for (int which = 0; which < 3; ++which) {
            Cyclotomic s(t.exponent);
            for (int c = 0; c < t.class_count(); ++c)
                if (t.class_rep_orders[c] == sig.periods[which])
                    s += t.rows[row][c] * Rat(t.class_sizes[c]);
            term *= s;
        }
        total += term;
    }
    total = total * Rat(1, g.order);
    if (!total.is_rational() || !total.rational_value().is_integer())
        throw internal_error("character count is not a rational integer (bad character table?)");
    return total.rational_value().as_integer();
}

struct EpimorphismCount {
    long long homs = 0;         // torsion-free homs (all images)
    long long epimorphisms = 0; // image = G
    long long classes = 0;      // epimorphisms / |Aut G|
};

/// Surjective refinement by inclusion-exclusion over the full subgroup
/// lattice, then division by the free Aut(G) action.
inline EpimorphismCount count_epimorphism_classes(const FiniteGroup& g, const Signature& sig,
                                                  int subgroup_order_cap = kDefaultSubgroupOrderCap,
                                                  std::uint64_t cost_cap = kDefaultSearchNodeCap) {
    if (sig.orbit_genus != 0)
        throw parameter_error("count_epimorphism_classes: only genus-0 signatures are counted");
    auto subs = all_subgroups(g, subgroup_order_cap);
    // T(H) per subgroup: tuples inside H; E(H) = T(H) - sum over proper subs
    std::vector<long long> T(subs.size()), E(subs.size());
    for (std::size_t i = 0; i < subs.size(); ++i) {
        std::map<int, std::vector<int>> pools;
        for (int x : subs[i]) pools[g.element_order[x]].push_back(x);
        T[i] = search_detail::count_product_one_tuples(g, sig.periods, pools, cost_cap);
    }
    for (std::size_t i = 0; i < subs.size(); ++i) {
        long long e = T[i];
        for (std::size_t k = 0; k < i; ++k)
            if (subs[k].size() < subs[i].size() &&
                std::includes(subs[i].begin(), subs[i].end(), subs[k].begin(), subs[k].end()))
                e -= E[k];
        E[i] = e;
    }
    EpimorphismCount out;
    out.homs = T.back();
    out.epimorphisms = E.back();  // subs sorted by size; last is G itself
    long long aut = automorphism_group_order(g);
    if (out.epimorphisms % aut != 0)
        throw internal_error("epimorphism count " + std::to_string(out.epimorphisms) +
                             " is not divisible by |Aut(G)| = " + std::to_string(aut));
    out.classes = out.epimorphisms / aut;
    return out;
}

}  // namespace curveaut
