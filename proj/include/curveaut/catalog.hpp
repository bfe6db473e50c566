#pragma once

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curveaut/constructors.hpp"
#include "curveaut/errors.hpp"
#include "curveaut/group.hpp"
#include "curveaut/morphisms.hpp"

namespace curveaut {

struct CatalogEntry {
    FiniteGroup group;
    std::vector<Perm> generators;  // as stored in the file
    bool complete_order = false;
    std::string source;
};

/// Validated collection of groups keyed by order. Completeness is a
/// per-order metadata claim carried by the file, never assumed.
struct GroupCatalog {
    std::map<int, std::vector<CatalogEntry>> by_order;

    bool has_order(int n) const { return by_order.count(n) > 0; }

    bool order_complete(int n) const {
        auto it = by_order.find(n);
        if (it == by_order.end() || it->second.empty()) return false;
        for (const auto& e : it->second)
            if (!e.complete_order) return false;
        return true;
    }

    const std::vector<CatalogEntry>& entries(int n) const {
        static const std::vector<CatalogEntry> empty;
        auto it = by_order.find(n);
        return it == by_order.end() ? empty : it->second;
    }

    const CatalogEntry* find_by_id(int order, int index) const {
        for (const auto& e : entries(order))
            if (e.group.catalog_id && e.group.catalog_id->second == index) return &e;
        return nullptr;
    }

    const CatalogEntry* find_by_label(const std::string& label) const {
        for (const auto& [n, es] : by_order)
            for (const auto& e : es)
                if (e.group.label == label) return &e;
        return nullptr;
    }

    std::size_t total_entries() const {
        std::size_t s = 0;
        for (const auto& [n, es] : by_order) s += es.size();
        return s;
    }
};

/// Number of groups of each order, where known (used to audit completeness
/// claims). Classical values up to order 50 plus the orders carried by the
/// bundled catalog extras.
inline std::optional<long long> known_group_count(int n) {
    static const std::map<int, long long> counts = {
        {1, 1},  {2, 1},  {3, 1},  {4, 2},  {5, 1},  {6, 2},  {7, 1},  {8, 5},  {9, 2},
        {10, 2}, {11, 1}, {12, 5}, {13, 1}, {14, 2}, {15, 1}, {16, 14}, {17, 1}, {18, 5},
        {19, 1}, {20, 5}, {21, 2}, {22, 2}, {23, 1}, {24, 15}, {25, 2}, {26, 2}, {27, 5},
        {28, 4}, {29, 1}, {30, 4}, {31, 1}, {32, 51}, {33, 1}, {34, 2}, {35, 1}, {36, 14},
        {37, 1}, {38, 2}, {39, 2}, {40, 14}, {41, 1}, {42, 6}, {43, 1}, {44, 4}, {45, 2},
        {46, 2}, {47, 1}, {48, 52}, {49, 2}, {50, 5}, {60, 13}, {120, 47}, {168, 57}};
    auto it = counts.find(n);
    if (it == counts.end()) return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------------------------
// builtin catalog

namespace builtin {

/// Binary octahedral group of order 48 as 2x2 matrices over F_7
/// (sqrt(2) = 3 and the quaternion units live there).
inline FiniteGroup binary_octahedral() {
    const int p = 7;
    auto mat_perm = [&](std::array<int, 4> m) {
        int d = p * p - 1;
        Perm perm(d);
        auto vec_index = [&](int x, int y) { return x * p + y - 1; };
        for (int x = 0; x < p; ++x)
            for (int y = 0; y < p; ++y) {
                if (x == 0 && y == 0) continue;
                int nx = ((m[0] * x + m[1] * y) % p + p) % p;
                int ny = ((m[2] * x + m[3] * y) % p + p) % p;
                perm[vec_index(x, y)] = vec_index(nx, ny);
            }
        return perm;
    };
    // u = (1+i)/sqrt(2) = 5*[[1,-1],[1,1]] (u^2 = i) and
    // w = (1+i+j+k)/2 = [[0,2],[3,1]] (w^3 = -1) generate the group
    std::vector<Perm> gens{mat_perm({5, 2, 5, 5}), mat_perm({0, 2, 3, 1})};
    return group_from_permutations(gens, "2O48");
}

/// Heisenberg group of order 27 (extraspecial, exponent 3).
inline FiniteGroup heisenberg27() {
    auto a = abelian_group({3, 3});
    // C3 acts by the unipotent map (x, y) -> (x, x + y)
    auto idx = [](int x, int y) { return x * 3 + y; };
    Perm unip(9), id(9);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            id[idx(x, y)] = idx(x, y);
            unip[idx(x, y)] = idx(x, (x + y) % 3);
        }
    Perm unip2 = perm_compose(unip, unip);
    return semidirect_abelian(a, cyclic_group(3), {id, unip, unip2}, "Heis27");
}

/// C3 x| D8 with the rotation of D8 inverting C3 and the reflection trivial.
inline FiniteGroup c3_semi_d8() {
    auto d8 = dihedral_group(4);
    auto c3 = cyclic_group(3);
    Perm inv{0, 2, 1}, id{0, 1, 2};
    std::vector<Perm> theta(d8.order);
    // rotation subgroup of dihedral_group(4) = elements 0..3 (r^i), reflections 4..7
    for (int x = 0; x < d8.order; ++x) {
        int rot = x % 4;  // encoding: e*n + i with n = 4
        theta[x] = (rot % 2 == 1) ? inv : id;
    }
    return semidirect_abelian(c3, d8, theta, "C3:D8");
}

/// C2^2 x| C4 with C4 swapping the two factors (the remaining nonabelian
/// group of order 16, also describable as (C4 x C2) : C2).
inline FiniteGroup e4_semi_c4() {
    auto a = abelian_group({2, 2});
    Perm swap{0, 2, 1, 3};  // tuples 00,01,10,11: swap coordinates
    Perm id{0, 1, 2, 3};
    return semidirect_abelian(a, cyclic_group(4), {id, swap, id, swap}, "(C4xC2):C2");
}

struct Spec {
    int order;
    int index;  // catalog id; mirrors the standard small-group numbering where pinned
    std::function<FiniteGroup()> make;
};

/// Construction registry. Orders 1..31 are complete; within an order the
/// index matches the standard small-group numbering (the offline pin table).
inline const std::vector<Spec>& catalog_specs() {
    static const std::vector<Spec> specs = [] {
        std::vector<Spec> s;
        auto C = [](int n) { return [n] { return cyclic_group(n); }; };
        auto D = [](int n) { return [n] { return dihedral_group(n / 2); }; };  // n = order
        auto Ab = [](std::vector<int> f, std::string lbl) {
            return [f, lbl] { return abelian_group(f, lbl); };
        };
        auto Dic = [](int n) { return [n] { return dicyclic_group(n / 4); }; };  // n = order
        auto Semi = [](int n, int k, int m, std::string lbl) {
            return [=] { return semidirect_cyclic(n, k, m, lbl); };
        };
        auto Prod = [](std::function<FiniteGroup()> a, std::function<FiniteGroup()> b,
                       std::string lbl) {
            return [=] {
                auto g = direct_product(a(), b(), lbl);
                return g;
            };
        };

        // order 1..15
        s.push_back({1, 1, C(1)});
        s.push_back({2, 1, C(2)});
        s.push_back({3, 1, C(3)});
        s.push_back({4, 1, C(4)});
        s.push_back({4, 2, Ab({2, 2}, "C2xC2")});
        s.push_back({5, 1, C(5)});
        s.push_back({6, 1, [] { return dihedral_group(3, "S3"); }});
        s.push_back({6, 2, C(6)});
        s.push_back({7, 1, C(7)});
        s.push_back({8, 1, C(8)});
        s.push_back({8, 2, Ab({4, 2}, "C4xC2")});
        s.push_back({8, 3, D(8)});
        s.push_back({8, 4, [] { return dicyclic_group(2, "Q8"); }});
        s.push_back({8, 5, Ab({2, 2, 2}, "C2^3")});
        s.push_back({9, 1, C(9)});
        s.push_back({9, 2, Ab({3, 3}, "C3xC3")});
        s.push_back({10, 1, D(10)});
        s.push_back({10, 2, C(10)});
        s.push_back({11, 1, C(11)});
        s.push_back({12, 1, [] { return dicyclic_group(3, "Dic12"); }});
        s.push_back({12, 2, C(12)});
        s.push_back({12, 3, [] { return alternating_group(4); }});
        s.push_back({12, 4, D(12)});
        s.push_back({12, 5, Ab({6, 2}, "C6xC2")});
        s.push_back({13, 1, C(13)});
        s.push_back({14, 1, D(14)});
        s.push_back({14, 2, C(14)});
        s.push_back({15, 1, C(15)});

        // order 16
        s.push_back({16, 1, C(16)});
        s.push_back({16, 2, Ab({4, 4}, "C4xC4")});
        s.push_back({16, 3, [] { return e4_semi_c4(); }});
        s.push_back({16, 4, Semi(4, 3, 4, "C4:C4")});
        s.push_back({16, 5, Ab({8, 2}, "C8xC2")});
        s.push_back({16, 6, Semi(8, 5, 2, "M16")});
        s.push_back({16, 7, D(16)});
        s.push_back({16, 8, Semi(8, 3, 2, "SD16")});
        s.push_back({16, 9, [] { return dicyclic_group(4, "Q16"); }});
        s.push_back({16, 10, Ab({4, 2, 2}, "C4xC2^2")});
        s.push_back({16, 11, Prod(C(2), D(8), "C2xD8")});
        s.push_back({16, 12, Prod(C(2), [] { return dicyclic_group(2, "Q8"); }, "C2xQ8")});
        s.push_back({16, 13, [] {
                         auto d8 = dihedral_group(4, "D8");
                         auto c4 = cyclic_group(4);
                         return central_product(d8, 2 /* r^2 */, c4, 2 /* c^2 */, "C4oD8");
                     }});
        s.push_back({16, 14, Ab({2, 2, 2, 2}, "C2^4")});

        // order 17..23
        s.push_back({17, 1, C(17)});
        s.push_back({18, 1, D(18)});
        s.push_back({18, 2, C(18)});
        s.push_back({18, 3, Prod(C(3), [] { return dihedral_group(3, "S3"); }, "C3xS3")});
        s.push_back({18, 4, [] { return generalized_dihedral(abelian_group({3, 3}), "Dih(C3xC3)"); }});
        s.push_back({18, 5, Ab({6, 3}, "C6xC3")});
        s.push_back({19, 1, C(19)});
        s.push_back({20, 1, [] { return dicyclic_group(5, "Dic20"); }});
        s.push_back({20, 2, C(20)});
        s.push_back({20, 3, Semi(5, 2, 4, "F20")});
        s.push_back({20, 4, D(20)});
        s.push_back({20, 5, Ab({10, 2}, "C10xC2")});
        s.push_back({21, 1, Semi(7, 2, 3, "C7:C3")});
        s.push_back({21, 2, C(21)});
        s.push_back({22, 1, D(22)});
        s.push_back({22, 2, C(22)});
        s.push_back({23, 1, C(23)});

        // order 24
        s.push_back({24, 1, Semi(3, 2, 8, "C3:C8")});
        s.push_back({24, 2, C(24)});
        s.push_back({24, 3, [] { return matrix_group_2x2(3, true, "SL(2,3)"); }});
        s.push_back({24, 4, [] { return dicyclic_group(6, "Dic24"); }});
        s.push_back({24, 5, Prod(C(4), [] { return dihedral_group(3, "S3"); }, "C4xS3")});
        s.push_back({24, 6, D(24)});
        s.push_back({24, 7, Prod(C(2), [] { return dicyclic_group(3, "Dic12"); }, "C2xDic12")});
        s.push_back({24, 8, [] { return c3_semi_d8(); }});
        s.push_back({24, 9, Ab({12, 2}, "C12xC2")});
        s.push_back({24, 10, Prod(C(3), D(8), "C3xD8")});
        s.push_back({24, 11, Prod(C(3), [] { return dicyclic_group(2, "Q8"); }, "C3xQ8")});
        s.push_back({24, 12, [] { return symmetric_group(4); }});
        s.push_back({24, 13, Prod(C(2), [] { return alternating_group(4); }, "C2xA4")});
        s.push_back({24, 14, Prod(Ab({2, 2}, "C2xC2"), [] { return dihedral_group(3, "S3"); },
                                  "C2^2xS3")});
        s.push_back({24, 15, Ab({6, 2, 2}, "C6xC2^2")});

        // order 25..31
        s.push_back({25, 1, C(25)});
        s.push_back({25, 2, Ab({5, 5}, "C5xC5")});
        s.push_back({26, 1, D(26)});
        s.push_back({26, 2, C(26)});
        s.push_back({27, 1, C(27)});
        s.push_back({27, 2, Ab({9, 3}, "C9xC3")});
        s.push_back({27, 3, [] { return heisenberg27(); }});
        s.push_back({27, 4, Semi(9, 4, 3, "M27")});
        s.push_back({27, 5, Ab({3, 3, 3}, "C3^3")});
        s.push_back({28, 1, [] { return dicyclic_group(7, "Dic28"); }});
        s.push_back({28, 2, C(28)});
        s.push_back({28, 3, D(28)});
        s.push_back({28, 4, Ab({14, 2}, "C14xC2")});
        s.push_back({29, 1, C(29)});
        s.push_back({30, 1, Prod(C(5), [] { return dihedral_group(3, "S3"); }, "C5xS3")});
        s.push_back({30, 2, Prod(C(3), D(10), "C3xD10")});
        s.push_back({30, 3, D(30)});
        s.push_back({30, 4, C(30)});
        s.push_back({31, 1, C(31)});

        // incomplete extras carried for the classification and maximality runs
        s.push_back({48, 28, [] { return binary_octahedral(); }});
        s.push_back({48, 29, [] { return matrix_group_2x2(3, false, "GL(2,3)"); }});
        s.push_back({48, 48, Prod(C(2), [] { return symmetric_group(4); }, "C2xS4")});
        s.push_back({60, 5, [] { return alternating_group(5); }});
        s.push_back({120, 5, [] { return matrix_group_2x2(5, true, "SL(2,5)"); }});
        s.push_back({120, 34, [] { return symmetric_group(5); }});
        s.push_back({168, 42, [] { return projective_group_2(7, true, "PSL(2,7)"); }});
        return s;
    }();
    return specs;
}

inline bool order_is_complete_in_builtin(int order) { return order >= 1 && order <= 31; }

}  // namespace builtin

/// Preferred small-degree permutation generators: natural action when the
/// group was built from permutations, else the regular representation of a
/// small generating set.
inline std::vector<Perm> catalog_generators_for(const FiniteGroup& g) {
    return regular_representation_generators(g);
}

inline GroupCatalog builtin_catalog() {
    GroupCatalog cat;
    for (const auto& spec : builtin::catalog_specs()) {
        CatalogEntry e;
        e.group = spec.make();
        if (e.group.order != spec.order)
            throw internal_error("builtin catalog: order mismatch for " + e.group.label);
        e.group.catalog_id = {spec.order, spec.index};
        e.generators = catalog_generators_for(e.group);
        e.complete_order = builtin::order_is_complete_in_builtin(spec.order);
        e.source = "builtin";
        cat.by_order[spec.order].push_back(std::move(e));
    }
    return cat;
}

// ---------------------------------------------------------------------------
// file I/O: line-delimited JSON records

inline void catalog_write(const GroupCatalog& cat, std::ostream& os) {
    for (const auto& [order, entries] : cat.by_order) {
        for (const auto& e : entries) {
            nlohmann::ordered_json j;
            j["order"] = order;
            j["index"] = e.group.catalog_id ? e.group.catalog_id->second : 0;
            j["label"] = e.group.label;
            j["generators"] = e.generators;
            j["complete_order"] = e.complete_order;
            j["source"] = e.source;
            os << j.dump() << "\n";
        }
    }
}

inline void write_builtin_catalog(std::ostream& os) { catalog_write(builtin_catalog(), os); }

inline GroupCatalog catalog_load(std::istream& is, const std::string& name = "<stream>") {
    GroupCatalog cat;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw data_error(name + ":" + std::to_string(lineno) + ": JSON parse error: " + e.what());
        }
        try {
            int order = j.at("order").get<int>();
            int index = j.at("index").get<int>();
            std::string label = j.at("label").get<std::string>();
            std::vector<Perm> gens = j.at("generators").get<std::vector<Perm>>();
            bool complete = j.at("complete_order").get<bool>();
            std::string source = j.value("source", "");
            CatalogEntry e;
            e.group = group_from_permutations(gens, label);
            if (e.group.order != order)
                throw data_error("declared order " + std::to_string(order) +
                                 " but generators span a group of order " +
                                 std::to_string(e.group.order));
            e.group.catalog_id = {order, index};
            e.generators = std::move(gens);
            e.complete_order = complete;
            e.source = std::move(source);
            cat.by_order[order].push_back(std::move(e));
        } catch (const data_error& e) {
            throw data_error(name + ":" + std::to_string(lineno) + ": " + e.what());
        } catch (const nlohmann::json::exception& e) {
            throw data_error(name + ":" + std::to_string(lineno) + ": bad record: " + e.what());
        }
    }
    return cat;
}

inline GroupCatalog catalog_load_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw data_error("cannot open catalog file: " + path);
    return catalog_load(f, path);
}

struct CatalogValidationReport {
    bool ok = true;
    std::vector<std::string> problems;
    std::vector<std::string> notes;

    void problem(std::string m) {
        ok = false;
        problems.push_back(std::move(m));
    }
};

/// Full validation: group axioms per entry, pairwise non-isomorphism within
/// each order, and count checks against the reference table for orders
/// carrying a completeness claim.
inline CatalogValidationReport catalog_validate(const GroupCatalog& cat) {
    CatalogValidationReport rep;
    for (const auto& [order, entries] : cat.by_order) {
        for (const auto& e : entries) {
            std::string why;
            if (!group_axioms_ok(e.group, &why))
                rep.problem("entry " + e.group.label + " (order " + std::to_string(order) +
                            "): axiom failure: " + why);
        }
        for (std::size_t i = 0; i < entries.size(); ++i)
            for (std::size_t j = i + 1; j < entries.size(); ++j) {
                if (entries[i].group.catalog_id && entries[j].group.catalog_id &&
                    *entries[i].group.catalog_id == *entries[j].group.catalog_id)
                    rep.problem("duplicate catalog id at order " + std::to_string(order));
                if (is_isomorphic(entries[i].group, entries[j].group))
                    rep.problem("order " + std::to_string(order) + ": entries " +
                                entries[i].group.label + " and " + entries[j].group.label +
                                " are isomorphic");
            }
        bool claimed = !entries.empty() && cat.order_complete(order);
        if (claimed) {
            auto expected = known_group_count(order);
            if (expected && static_cast<long long>(entries.size()) != *expected)
                rep.problem("order " + std::to_string(order) + " claims completeness with " +
                            std::to_string(entries.size()) + " entries; reference count is " +
                            std::to_string(*expected));
            else if (!expected)
                rep.notes.push_back("order " + std::to_string(order) +
                                    ": completeness claimed but no reference count is bundled");
        }
    }
    return rep;
}

}  // namespace curveaut
