#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "curveaut/group.hpp"
#include "curveaut/errors.hpp"

namespace curveaut {

inline constexpr int kDefaultSubgroupOrderCap = 512;

/// Every subgroup of G, each as a sorted element list. Enumeration grows
/// subgroups one generator at a time; every subgroup is reachable that way.
inline std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g,
                                                   int order_cap = kDefaultSubgroupOrderCap,
                                                   std::size_t count_cap = 200000) {
    if (g.order > order_cap)
        throw resource_error("all_subgroups: |G| exceeds cap of " + std::to_string(order_cap));
    // adjoining x and adjoining any generator of <x> give the same subgroup,
    // so only the least generator of each cyclic subgroup is tried
    std::vector<bool> canonical(g.order, false);
    for (int x = 0; x < g.order; ++x) {
        int least = x;
        int n = g.element_order[x];
        int p = x;
        for (int k = 2; k <= n; ++k) {
            p = g.op(p, x);
            if (std::gcd(k, n) == 1 && p < least) least = p;
        }
        canonical[x] = (least == x);
    }
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> work;
    std::vector<int> trivial{0};
    seen.insert(trivial);
    work.push_back(trivial);
    for (std::size_t w = 0; w < work.size(); ++w) {
        std::vector<int> h = work[w];
        if (static_cast<int>(h.size()) == g.order) continue;
        std::vector<bool> in(g.order, false);
        for (int x : h) in[x] = true;
        for (int x = 1; x < g.order; ++x) {
            if (in[x] || !canonical[x]) continue;
            std::vector<int> gens = h;
            gens.push_back(x);
            std::vector<int> k = generated_subgroup(g, gens);
            if (seen.insert(k).second) {
                work.push_back(std::move(k));
                if (seen.size() > count_cap)
                    throw resource_error("all_subgroups: subgroup count exceeds cap of " +
                                         std::to_string(count_cap));
            }
        }
    }
    std::vector<std::vector<int>> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

struct SubgroupClass {
    std::vector<int> representative;  // lex-least member set of the class
    int index = 0;                    // [G : H]
    int class_size = 0;               // number of conjugates
};

/// One representative per conjugacy class of subgroups, ordered by
/// (subgroup order, lexicographic element set).
inline std::vector<SubgroupClass> subgroups_up_to_conjugacy(const FiniteGroup& g,
                                                            int order_cap = kDefaultSubgroupOrderCap) {
    auto subs = all_subgroups(g, order_cap);
    std::set<std::vector<int>> remaining(subs.begin(), subs.end());
    std::vector<SubgroupClass> out;
    for (const auto& h : subs) {
        if (!remaining.count(h)) continue;
        // conjugate orbit
        std::set<std::vector<int>> orbit;
        for (int t = 0; t < g.order; ++t) {
            std::vector<int> c;
            c.reserve(h.size());
            for (int x : h) c.push_back(g.conj(t, x));
            std::sort(c.begin(), c.end());
            orbit.insert(std::move(c));
        }
        SubgroupClass cls;
        cls.representative = *orbit.begin();
        cls.index = g.order / static_cast<int>(h.size());
        cls.class_size = static_cast<int>(orbit.size());
        for (const auto& c : orbit) remaining.erase(c);
        out.push_back(std::move(cls));
    }
    std::sort(out.begin(), out.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
        if (a.representative.size() != b.representative.size())
            return a.representative.size() < b.representative.size();
        return a.representative < b.representative;
    });
    return out;
}

/// Normal closure of the subgroup generated by `gens`.
inline std::vector<int> normal_closure(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<int> all;
    for (int x : gens)
        for (int t = 0; t < g.order; ++t) all.push_back(g.conj(t, x));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return generated_subgroup(g, all);
}

}  // namespace curveaut
