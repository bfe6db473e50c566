#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "curveaut/conjugacy.hpp"
#include "curveaut/group.hpp"

namespace curveaut {

inline constexpr int kDefaultAutOrderCap = 512;
inline constexpr long long kDefaultAutCountCap = 2'000'000;

/// Try to extend generator images to a homomorphism G -> H. Returns the full
/// image map (element of G -> element of H) or nullopt if no homomorphism
/// maps gens[i] -> images[i].
inline std::optional<std::vector<int>> extend_homomorphism(const FiniteGroup& g,
                                                           const std::vector<int>& gens,
                                                           const std::vector<int>& images,
                                                           const FiniteGroup& h) {
    std::vector<int> phi(g.order, -1);
    phi[0] = 0;
    // BFS over products: every element of <gens> gets a value; conflicts kill it
    std::vector<int> frontier{0};
    std::vector<int> word_elems{0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier) {
            for (std::size_t i = 0; i < gens.size(); ++i) {
                int y = g.op(x, gens[i]);
                int v = h.op(phi[x], images[i]);
                if (phi[y] == -1) {
                    phi[y] = v;
                    next.push_back(y);
                } else if (phi[y] != v) {
                    return std::nullopt;
                }
            }
        }
        frontier = std::move(next);
    }
    for (int x = 0; x < g.order; ++x)
        if (phi[x] == -1) return std::nullopt;  // gens do not generate G
    // BFS guarantees phi(x * gen) = phi(x) phi(gen); verify full multiplicativity
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            if (phi[g.op(x, y)] != h.op(phi[x], phi[y])) return std::nullopt;
    return phi;
}

/// Cheap isomorphism invariants used to fast-reject candidate pairs.
struct GroupFingerprint {
    int order = 0;
    std::vector<std::pair<int, int>> order_histogram;  // (element order, count)
    std::vector<int> class_sizes;                      // sorted
    int center_order = 0;
    int derived_order = 0;
    std::vector<int> abelianization;                   // cyclic factor orders of G/G'

    bool operator==(const GroupFingerprint&) const = default;
    bool operator<(const GroupFingerprint& o) const {
        return std::tie(order, order_histogram, class_sizes, center_order, derived_order,
                        abelianization) < std::tie(o.order, o.order_histogram, o.class_sizes,
                                                   o.center_order, o.derived_order, o.abelianization);
    }
};

inline std::vector<int> derived_subgroup(const FiniteGroup& g) {
    std::vector<int> comms;
    for (int a = 0; a < g.order; ++a)
        for (int b = a + 1; b < g.order; ++b) comms.push_back(g.commutator(a, b));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return generated_subgroup(g, comms);
}

/// Invariant factors of a finite abelian group (d1 | d2 | ... ).
inline std::vector<int> abelian_invariants(const FiniteGroup& a) {
    // repeatedly split off a cyclic factor of maximal order
    FiniteGroup cur = a;
    std::vector<int> out;
    while (cur.order > 1) {
        int best = 1, arg = 0;
        for (int x = 0; x < cur.order; ++x)
            if (cur.element_order[x] > best) { best = cur.element_order[x]; arg = x; }
        out.push_back(best);
        std::vector<int> sub = generated_subgroup(cur, {arg});
        cur = quotient_group(cur, sub);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline GroupFingerprint fingerprint(const FiniteGroup& g) {
    GroupFingerprint f;
    f.order = g.order;
    std::map<int, int> hist;
    for (int o : g.element_order) ++hist[o];
    f.order_histogram.assign(hist.begin(), hist.end());
    auto cc = conjugacy_classes(g);
    f.class_sizes = cc.sizes;
    std::sort(f.class_sizes.begin(), f.class_sizes.end());
    f.center_order = static_cast<int>(g.center().size());
    auto der = derived_subgroup(g);
    f.derived_order = static_cast<int>(der.size());
    f.abelianization = abelian_invariants(quotient_group(g, der));
    return f;
}

namespace detail {

/// Backtracking over images of a small generating set of G inside H.
/// `want_injective`: images must define an injective hom (|G| = image size).
/// `collect`: receive each full image map; return false to stop the search.
template <typename Sink>
void search_homomorphisms(const FiniteGroup& g, const FiniteGroup& h, bool want_surjective_onto_h,
                          Sink&& collect) {
    std::vector<int> gens = small_generating_set(g);
    if (gens.empty()) {  // trivial G
        std::vector<int> phi(1, 0);
        collect(phi);
        return;
    }
    auto cc_h = conjugacy_classes(h);
    // candidate images per generator: same element order; if surjective (iso
    // case), also matching class size
    auto cc_g = conjugacy_classes(g);
    std::vector<std::vector<int>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (int y = 0; y < h.order; ++y) {
            if (h.element_order[y] != g.element_order[gens[i]]) continue;
            if (want_surjective_onto_h &&
                cc_h.sizes[cc_h.class_of[y]] != cc_g.sizes[cc_g.class_of[gens[i]]])
                continue;
            candidates[i].push_back(y);
        }
        if (candidates[i].empty()) return;
    }
    std::vector<int> images(gens.size(), -1);
    bool stop = false;
    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (stop) return;
        if (depth == gens.size()) {
            auto phi = extend_homomorphism(g, gens, images, h);
            if (phi) {
                if (!collect(*phi)) stop = true;
            }
            return;
        }
        // partial consistency: the map restricted to <gens[0..depth]> must
        // already extend without conflicts
        for (int cand : candidates[depth]) {
            images[depth] = cand;
            std::vector<int> phi(g.order, -1);
            phi[0] = 0;
            bool ok = true;
            std::vector<int> frontier{0};
            while (!frontier.empty() && ok) {
                std::vector<int> next;
                for (int x : frontier) {
                    for (std::size_t i = 0; i <= depth && ok; ++i) {
                        int y = g.op(x, gens[i]);
                        int v = h.op(phi[x], images[i]);
                        if (phi[y] == -1) {
                            phi[y] = v;
                            next.push_back(y);
                        } else if (phi[y] != v) {
                            ok = false;
                        }
                    }
                    if (!ok) break;
                }
                frontier = std::move(next);
            }
            if (ok) self(self, depth + 1);
            if (stop) return;
        }
        images[depth] = -1;
    };
    rec(rec, 0);
}

}  // namespace detail

/// Exhaustive isomorphism test with fingerprint fast-reject.
inline bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                          int order_cap = kDefaultAutOrderCap) {
    if (g.order != h.order) return false;
    if (g.order > order_cap && h.order > order_cap)
        throw resource_error("is_isomorphic: both orders exceed cap of " + std::to_string(order_cap));
    if (!(fingerprint(g) == fingerprint(h))) return false;
    bool found = false;
    detail::search_homomorphisms(g, h, true, [&](const std::vector<int>& phi) {
        std::vector<bool> hit(h.order, false);
        for (int v : phi) hit[v] = true;
        for (bool b : hit)
            if (!b) return true;  // not bijective, keep searching
        found = true;
        return false;
    });
    return found;
}

/// All automorphisms of G as element permutations, plus |Aut(G)|.
struct AutomorphismGroup {
    long long order = 0;
    std::vector<std::vector<int>> automorphisms;  // each is an element permutation of G
};

inline AutomorphismGroup automorphism_group(const FiniteGroup& g,
                                            int order_cap = kDefaultAutOrderCap,
                                            long long count_cap = kDefaultAutCountCap) {
    if (g.order > order_cap)
        throw resource_error("automorphism_group: |G| exceeds cap of " + std::to_string(order_cap));
    AutomorphismGroup out;
    detail::search_homomorphisms(g, g, true, [&](const std::vector<int>& phi) {
        std::vector<bool> hit(g.order, false);
        for (int v : phi) hit[v] = true;
        for (bool b : hit)
            if (!b) return true;
        out.automorphisms.push_back(phi);
        if (static_cast<long long>(out.automorphisms.size()) > count_cap)
            throw resource_error("automorphism_group: |Aut(G)| exceeds cap of " +
                                 std::to_string(count_cap));
        return true;
    });
    out.order = static_cast<long long>(out.automorphisms.size());
    return out;
}

inline long long automorphism_group_order(const FiniteGroup& g,
                                          int order_cap = kDefaultAutOrderCap) {
    return automorphism_group(g, order_cap).order;
}

/// First monomorphism G -> H extending over each choice of generator images,
/// or nullopt. Used by the overgroup search.
inline std::optional<std::vector<int>> find_monomorphism(const FiniteGroup& g,
                                                         const FiniteGroup& h) {
    if (h.order % g.order != 0) return std::nullopt;
    std::optional<std::vector<int>> result;
    detail::search_homomorphisms(g, h, false, [&](const std::vector<int>& phi) {
        std::vector<bool> hit(h.order, false);
        int img = 0;
        for (int v : phi)
            if (!hit[v]) { hit[v] = true; ++img; }
        if (img != g.order) return true;  // not injective
        result = phi;
        return false;
    });
    return result;
}

}  // namespace curveaut
