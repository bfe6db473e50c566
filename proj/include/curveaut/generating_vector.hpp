#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "curveaut/group.hpp"
#include "curveaut/signature.hpp"

namespace curveaut {

/// Witness for a surface-kernel epimorphism: a tuple
/// (a_1, b_1, ..., a_g0, b_g0, c_1, ..., c_r) of group elements with
/// prod [a_i, b_i] prod c_j = 1, order(c_j) = m_j, generating the group.
/// The signature keeps the period order the search used (not canonicalized).
struct GeneratingVector {
    Signature signature;              // periods in vector order
    std::vector<int> hyperbolic_part; // 2 g0 entries: a_1, b_1, a_2, b_2, ...
    std::vector<int> elliptic_part;   // r entries

    std::vector<int> all_entries() const {
        std::vector<int> out = hyperbolic_part;
        out.insert(out.end(), elliptic_part.begin(), elliptic_part.end());
        return out;
    }
};

/// The three defining conditions, checked independently of any search.
inline bool generating_vector_valid(const FiniteGroup& g, const GeneratingVector& v,
                                    std::string* why = nullptr) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    int g0 = v.signature.orbit_genus;
    if (static_cast<int>(v.hyperbolic_part.size()) != 2 * g0)
        return fail("hyperbolic part has wrong length");
    if (v.elliptic_part.size() != v.signature.periods.size())
        return fail("elliptic part has wrong length");
    for (std::size_t j = 0; j < v.elliptic_part.size(); ++j)
        if (g.element_order[v.elliptic_part[j]] != v.signature.periods[j])
            return fail("order(c_" + std::to_string(j + 1) + ") != m_" + std::to_string(j + 1));
    int prod = 0;
    for (int i = 0; i < g0; ++i)
        prod = g.op(prod, g.commutator(v.hyperbolic_part[2 * i], v.hyperbolic_part[2 * i + 1]));
    for (int c : v.elliptic_part) prod = g.op(prod, c);
    if (prod != 0) return fail("long relation fails");
    if (!generates_whole_group(g, v.all_entries())) return fail("entries do not generate");
    return true;
}

/// Elementary braid move on the elliptic part:
///   (..., c_i, c_{i+1}, ...) -> (..., c_{i+1}, c_{i+1}^-1 c_i c_{i+1}, ...)
/// Preserves the product, the generated subgroup, and the period multiset
/// (the two periods swap places).
inline GeneratingVector braid_move(const FiniteGroup& g, const GeneratingVector& v, int i) {
    GeneratingVector w = v;
    int ci = v.elliptic_part[i], cj = v.elliptic_part[i + 1];
    w.elliptic_part[i] = cj;
    w.elliptic_part[i + 1] = g.op(g.op(g.inv(cj), ci), cj);
    std::swap(w.signature.periods[i], w.signature.periods[i + 1]);
    return w;
}

inline GeneratingVector braid_move_inverse(const FiniteGroup& g, const GeneratingVector& v, int i) {
    GeneratingVector w = v;
    int ci = v.elliptic_part[i], cj = v.elliptic_part[i + 1];
    w.elliptic_part[i] = g.op(g.op(ci, cj), g.inv(ci));
    w.elliptic_part[i + 1] = ci;
    std::swap(w.signature.periods[i], w.signature.periods[i + 1]);
    return w;
}

/// Orbit of a vector under braid moves on the elliptic entries, capped.
/// All members witness the same action with reordered canonical generators.
inline std::vector<GeneratingVector> braid_orbit(const FiniteGroup& g, const GeneratingVector& v,
                                                 std::size_t cap = 20000) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    std::vector<GeneratingVector> orbit{v};
    seen.insert({v.elliptic_part, v.signature.periods});
    for (std::size_t k = 0; k < orbit.size() && orbit.size() < cap; ++k) {
        GeneratingVector cur = orbit[k];
        int r = static_cast<int>(cur.elliptic_part.size());
        for (int i = 0; i + 1 < r; ++i) {
            for (const GeneratingVector& w :
                 {braid_move(g, cur, i), braid_move_inverse(g, cur, i)}) {
                if (seen.insert({w.elliptic_part, w.signature.periods}).second) {
                    orbit.push_back(w);
                    if (orbit.size() >= cap) break;
                }
            }
        }
    }
    return orbit;
}

}  // namespace curveaut
