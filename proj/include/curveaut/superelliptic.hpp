#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "curveaut/catalog.hpp"
#include "curveaut/errors.hpp"
#include "curveaut/group.hpp"
#include "curveaut/maximality.hpp"  // ReducedKind
#include "curveaut/morphisms.hpp"
#include "curveaut/riemann_hurwitz.hpp"

namespace curveaut {

/// Canonical data of a cyclic (superelliptic) curve
///   y^n = (x - a_1)^{n_1} ... (x - a_t)^{n_t}
/// The branch points themselves do not enter the genus computation; only
/// the exponents do.
struct CyclicCurveData {
    int n = 0;
    std::vector<int> exponents;  // n_1 ... n_t
    int characteristic = 0;      // 0 for char zero

    void validate() const {
        if (n < 2) throw parameter_error("cyclic curve: level n must be >= 2");
        if (exponents.empty()) throw parameter_error("cyclic curve: no branch exponents");
        long long sum = 0;
        int g = 0;
        for (int e : exponents) {
            if (e <= 0 || e >= n)
                throw parameter_error("cyclic curve: exponents must satisfy 0 < n_i < n");
            sum += e;
            g = std::gcd(g, e);
        }
        if (sum % n != 0)
            throw parameter_error("cyclic curve: n must divide the exponent sum (no branching over infinity)");
        if (g != 1) throw parameter_error("cyclic curve: gcd(n_1, ..., n_t) must be 1 (irreducibility)");
    }
};

/// Genus via the tame Hurwitz formula over the x-line: each a_i splits into
/// gcd(n, n_i) branches of ramification index n / gcd(n, n_i); condition 3
/// keeps infinity unramified.
inline long long cyclic_curve_genus(const CyclicCurveData& d) {
    d.validate();
    if (d.characteristic > 0 && d.n % d.characteristic == 0)
        throw parameter_error("cyclic curve: p | n is inseparable and unsupported");
    long long two_g_minus_2 = -2LL * d.n;
    for (int e : d.exponents) {
        long long di = std::gcd(d.n, e);
        long long mi = d.n / di;
        two_g_minus_2 += di * (mi - 1);
    }
    if (two_g_minus_2 % 2 != 0) throw internal_error("cyclic_curve_genus: parity violation");
    return two_g_minus_2 / 2 + 1;
}

// ---------------------------------------------------------------------------
// characteristic 2 hyperelliptic data

/// All ramification types of Artin-Schreier models y^2 + y = R(x): tuples of
/// odd polar orders n_a with sum (n_a + 1) = 2g + 2. Ordered by decreasing
/// part count, then lexicographically.
inline std::vector<std::vector<int>> char2_ramification_types(int g) {
    if (g < 2) throw parameter_error("char2_ramification_types: genus must be >= 2");
    int total = 2 * g + 2;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // parts n_a + 1 are even, each >= 2, nonincreasing
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(max_part, remaining); part >= 2; part -= 2) {
            cur.push_back(part - 1);  // store the odd polar order
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, total, total);
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return out;
}

/// Automorphism groups of characteristic-2 hyperelliptic curves of genus 3
/// and 4, as structural labels resolvable against the catalog.
inline std::vector<std::string> char2_hyperelliptic_groups(int g) {
    if (g == 3) return {"C2", "C4", "C2xC2", "C2^3", "C6", "C14", "D12"};
    if (g == 4) return {"C2", "C2xC2", "C4", "C2^3", "C6", "C18", "D20"};
    throw parameter_error("char2_hyperelliptic_groups: only genus 3 and 4 are tabulated");
}

// ---------------------------------------------------------------------------
// genus 3 / 4 automorphism-group lists by characteristic

/// Characteristic buckets the lists are stated for.
enum class CharBucket { p3, p5, p7, p0_or_large };

inline CharBucket char_bucket_for(int p, int genus) {
    if (p == 2) throw parameter_error("genus lists: characteristic 2 is handled separately");
    if (p == 3) return CharBucket::p3;
    if (p == 5) return CharBucket::p5;
    if (p == 7) return CharBucket::p7;
    if (p == 0 || p >= 11) return CharBucket::p0_or_large;
    (void)genus;
    throw parameter_error("genus lists: characteristic must be 0 or an odd prime");
}

/// Small-group id pairs of the automorphism groups of genus 3 and genus 4
/// superelliptic curves, per characteristic bucket. The pairs are opaque
/// data keys; resolution goes through the pinned construction table.
inline std::vector<std::pair<int, int>> genus34_superelliptic_lists(int genus, int p) {
    CharBucket b = char_bucket_for(p, genus);
    using L = std::vector<std::pair<int, int>>;
    if (genus == 3) {
        switch (b) {
            case CharBucket::p3:
                return L{{2, 1},  {4, 2},   {3, 1},   {4, 1},   {8, 2},   {8, 3},
                         {7, 1},  {14, 2},  {6, 2},   {8, 1},   {8, 5},   {16, 11},
                         {16, 10}, {32, 9}, {30, 2},  {16, 7},  {16, 8},  {6, 2}};
            case CharBucket::p5:
                return L{{2, 1},   {4, 2},  {3, 1},   {4, 1},   {8, 2},   {8, 3},  {7, 1},
                         {21, 1},  {14, 2}, {6, 2},   {12, 2},  {9, 1},   {8, 1},  {8, 5},
                         {16, 11}, {16, 10}, {32, 9}, {42, 3},  {12, 4},  {16, 7}, {24, 5},
                         {18, 3},  {16, 8}, {48, 33}, {48, 48}};
            case CharBucket::p7:
                return L{{2, 1},   {4, 2},   {3, 1},  {4, 1},   {8, 2},  {8, 3},  {7, 1},
                         {21, 1},  {6, 2},   {12, 2}, {9, 1},   {8, 1},  {8, 5},  {16, 11},
                         {16, 10}, {32, 9},  {30, 2}, {42, 3},  {12, 4}, {16, 7}, {24, 5},
                         {18, 3},  {16, 8},  {48, 33}, {48, 48}};
            case CharBucket::p0_or_large:
                return L{{2, 1},   {4, 2},  {3, 1},   {4, 1},   {8, 2},   {8, 3},  {7, 1},
                         {21, 1},  {14, 2}, {6, 2},   {12, 2},  {9, 1},   {8, 1},  {8, 5},
                         {16, 11}, {16, 10}, {32, 9}, {30, 2},  {42, 3},  {12, 4}, {16, 7},
                         {24, 5},  {18, 3},  {16, 8}, {48, 33}, {48, 48}};
        }
    }
    if (genus == 4) {
        switch (b) {
            case CharBucket::p3:
                return L{{2, 1},  {4, 2},  {3, 1},  {6, 2},   {5, 1},   {10, 2},  {20, 1},
                         {9, 1},  {18, 2}, {15, 1}, {4, 1},   {20, 4},  {8, 3},   {40, 8},
                         {12, 5}, {16, 7}, {20, 5}, {32, 19}, {24, 10}, {8, 4},   {9, 2},
                         {18, 5}};
            case CharBucket::p5:
                return L{{2, 1},   {4, 2},   {3, 1},   {6, 2},  {9, 2},   {5, 1},   {10, 2},
                         {20, 1},  {9, 1},   {27, 4},  {18, 2}, {4, 1},   {18, 3},  {8, 3},
                         {12, 5},  {36, 12}, {54, 4},  {16, 7}, {20, 5},  {32, 19}, {24, 10},
                         {8, 4},   {60, 9},  {36, 11}, {24, 3}, {72, 42}, {10, 2},  {18, 5}};
            case CharBucket::p7:
                return L{{2, 1},   {4, 2},  {3, 1},   {6, 2},   {9, 2},   {5, 1},   {10, 2},
                         {20, 1},  {9, 1},  {27, 4},  {18, 2},  {15, 1},  {4, 1},   {20, 4},
                         {18, 3},  {8, 3},  {40, 8},  {12, 5},  {36, 12}, {54, 4},  {16, 7},
                         {20, 5},  {32, 19}, {24, 10}, {8, 4},  {60, 9},  {36, 11}, {24, 3},
                         {72, 42}};
            case CharBucket::p0_or_large:
                return L{{2, 1},   {4, 2},  {3, 1},   {6, 2},   {9, 2},   {5, 1},   {10, 2},
                         {20, 1},  {9, 1},  {27, 4},  {18, 2},  {15, 1},  {4, 1},   {20, 4},
                         {18, 3},  {8, 3},  {40, 8},  {12, 5},  {36, 12}, {54, 4},  {16, 7},
                         {20, 5},  {32, 19}, {24, 10}, {8, 4},  {60, 9},  {36, 11}, {24, 3},
                         {72, 42}};
        }
    }
    throw parameter_error("genus34_superelliptic_lists: genus must be 3 or 4");
}

/// Resolution of a small-group id against the catalog: the id resolves when
/// the catalog carries an entry pinned to it. Unresolved ids are reported,
/// never guessed.
struct GapIdResolution {
    std::pair<int, int> id;
    bool resolved = false;
    std::string label;
};

inline GapIdResolution resolve_small_group_id(const GroupCatalog& catalog, std::pair<int, int> id) {
    GapIdResolution r;
    r.id = id;
    const CatalogEntry* e = catalog.find_by_id(id.first, id.second);
    if (e) {
        r.resolved = true;
        r.label = e->group.label;
    }
    return r;
}

// ---------------------------------------------------------------------------
// reduced automorphism groups

struct ReducedGroupResult {
    FiniteGroup quotient;
    std::optional<ReducedKind> kind;  // classification when it matches the sphere list
    std::string classification;       // human-readable
};

/// Quotient of G by a designated normal cyclic subgroup (given by a
/// generator element), classified against the finite Moebius families.
inline ReducedGroupResult reduced_group(const FiniteGroup& g, int generator_element,
                                        int expected_order = 0) {
    if (generator_element < 0 || generator_element >= g.order)
        throw parameter_error("reduced_group: generator element out of range");
    std::vector<int> sub = generated_subgroup(g, {generator_element});
    if (expected_order > 0 && static_cast<int>(sub.size()) != expected_order)
        throw parameter_error("reduced_group: designated subgroup has order " +
                              std::to_string(sub.size()) + ", expected " +
                              std::to_string(expected_order));
    if (!is_normal_subgroup(g, sub))
        throw parameter_error("reduced_group: designated cyclic subgroup is not normal");
    ReducedGroupResult out;
    out.quotient = quotient_group(g, sub, nullptr, g.label + "/C" + std::to_string(sub.size()));
    const FiniteGroup& q = out.quotient;
    int n = q.order;

    auto classify = [&]() -> std::optional<ReducedKind> {
        // cyclic
        for (int x = 0; x < n; ++x)
            if (q.element_order[x] == n) return ReducedKind{ReducedKind::C, n};
        if (n == 1) return ReducedKind{ReducedKind::C, 1};
        // dihedral of order 2m (sphere naming D_m)
        if (n % 2 == 0 && n >= 4 && is_isomorphic(q, dihedral_group(n / 2)))
            return ReducedKind{ReducedKind::D, n / 2};
        if (n == 12 && is_isomorphic(q, alternating_group(4))) return ReducedKind{ReducedKind::A4, 1};
        if (n == 24 && is_isomorphic(q, symmetric_group(4))) return ReducedKind{ReducedKind::S4, 1};
        if (n == 60 && is_isomorphic(q, alternating_group(5))) return ReducedKind{ReducedKind::A5, 1};
        return std::nullopt;
    };
    out.kind = classify();
    if (out.kind) {
        out.classification = out.kind->str();
    } else {
        // U (elementary abelian p-group) and the order-only classes
        bool elem_abelian = q.is_abelian();
        int p = 0;
        if (elem_abelian && n > 1) {
            p = q.element_order[1];
            for (int x = 1; x < n; ++x)
                if (q.element_order[x] != p) { elem_abelian = false; break; }
            for (int d = 2; d * d <= p; ++d)
                if (p % d == 0) elem_abelian = false;
        }
        if (elem_abelian && n > 1) {
            int t = 0;
            long long acc = 1;
            while (acc < n) { acc *= p; ++t; }
            out.classification = "U = C" + std::to_string(p) + "^" + std::to_string(t);
        } else {
            out.classification = "order " + std::to_string(n) +
                                 " (K_m / PSL / PGL classified by order and fingerprint only)";
        }
    }
    return out;
}

/// Convenience: find the designated central cyclic subgroup of order n with
/// the smallest generator index.
inline int find_central_cyclic_generator(const FiniteGroup& g, int n) {
    auto z = g.center();
    std::set<int> zset(z.begin(), z.end());
    for (int x = 0; x < g.order; ++x)
        if (g.element_order[x] == n && zset.count(x)) return x;
    // fall back to any normal cyclic subgroup of order n
    for (int x = 0; x < g.order; ++x)
        if (g.element_order[x] == n && is_normal_subgroup(g, generated_subgroup(g, {x}))) return x;
    throw parameter_error("no normal cyclic subgroup of order " + std::to_string(n));
}

}  // namespace curveaut
