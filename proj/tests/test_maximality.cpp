#include <catch2/catch_amalgamated.hpp>

#include "curveaut/catalog.hpp"
#include "curveaut/constructors.hpp"
#include "curveaut/maximality.hpp"

using namespace curveaut;

namespace {

/// Straight re-reading of the table rows, independent of the pattern
/// matcher: instantiate every row over a parameter grid and compare.
struct NaiveRow {
    std::string case_id;
    std::function<std::optional<std::pair<Signature, Signature>>(int, int, int)> instantiate;
};

const GroupCatalog& test_catalog() {
    static const GroupCatalog cat = builtin_catalog();
    return cat;
}

GeneratingVector cyclic_vector(const FiniteGroup& g, std::vector<int> exps,
                               const Signature& sig) {
    GeneratingVector v;
    v.signature = sig;
    for (int e : exps) v.elliptic_part.push_back(g.pow(1, e));
    return v;
}

}  // namespace

TEST_CASE("singerman_overgroups on (0;5,5,5) gives exactly N6, N7, N8") {
    auto ms = singerman_overgroups(parse_signature("0;5,5,5"));
    REQUIRE(ms.size() == 3);
    CHECK(ms[0].rule.case_id == "N6");
    CHECK(ms[0].outer.str() == "0;3,3,5");
    CHECK(ms[0].index == 3);
    CHECK(ms[1].rule.case_id == "N7");
    CHECK(ms[1].outer.str() == "0;2,3,10");
    CHECK(ms[1].index == 6);
    CHECK(ms[2].rule.case_id == "N8");
    CHECK(ms[2].outer.str() == "0;2,5,10");
    CHECK(ms[2].index == 2);
    for (const auto& m : ms) CHECK(m.normal);
}

TEST_CASE("the Hurwitz signature matches no row") {
    CHECK(singerman_overgroups(parse_signature("0;2,3,7")).empty());
}

TEST_CASE("(2;-) matches N1 only") {
    auto ms = singerman_overgroups(parse_signature("2;-"));
    REQUIRE(ms.size() == 1);
    CHECK(ms[0].rule.case_id == "N1");
    CHECK(ms[0].outer.str() == "0;2,2,2,2,2,2");
    CHECK(ms[0].index == 2);
}

TEST_CASE("(0;7,7,7) matches N6, N7, N8 (with u = t) and the sporadic T1") {
    auto ms = singerman_overgroups(parse_signature("0;7,7,7"));
    std::set<std::string> cases;
    for (const auto& m : ms) cases.insert(m.rule.case_id);
    CHECK(cases == std::set<std::string>{"N6", "N7", "N8", "T1"});
}

TEST_CASE("table file agrees with the compiled-in table") {
    auto from_file = load_singerman_rules_file(std::string(CURVEAUT_SOURCE_DIR) +
                                               "/data/singerman_list.json");
    const auto& builtin = singerman_rules();
    REQUIRE(from_file.size() == builtin.size());
    for (std::size_t i = 0; i < builtin.size(); ++i) {
        CHECK(from_file[i].case_id == builtin[i].case_id);
        CHECK(from_file[i].index == builtin[i].index);
        CHECK(from_file[i].normal == builtin[i].normal);
    }
}

TEST_CASE("index formula of the subgroup theorem validates every row") {
    // instantiate each row over t,u,n <= 12 and compare mu ratios
    for (const auto& rule : singerman_rules()) {
        std::set<std::string> vars;
        for (const auto& t : rule.inner.terms)
            if (!t.var.empty()) vars.insert(t.var);
        std::vector<std::map<std::string, int>> grids;
        if (vars.empty()) grids.push_back({});
        else if (vars.size() == 1) {
            for (int a = 2; a <= 12; ++a) grids.push_back({{*vars.begin(), a}});
        } else {
            auto it = vars.begin();
            std::string v1 = *it++, v2 = *it;
            for (int a = 2; a <= 12; ++a)
                for (int b = 2; b <= 12; ++b) grids.push_back({{v1, a}, {v2, b}});
        }
        for (const auto& asg : grids) {
            // build the inner signature; skip inadmissible parameter values
            bool ok = true;
            std::vector<int> inner_periods, outer_periods;
            for (const auto& t : rule.inner.terms) {
                int val = t.coef * (t.var.empty() ? 1 : asg.at(t.var));
                if (val < 2) ok = false;
                inner_periods.push_back(val);
            }
            for (const auto& t : rule.outer.terms) {
                int val = t.coef * (t.var.empty() ? 1 : asg.at(t.var));
                if (val < 2) ok = false;
                outer_periods.push_back(val);
            }
            for (const auto& c : rule.constraints) {
                int s = 0;
                for (const auto& v : c.vars) s += asg.at(v);
                if (s < c.bound) ok = false;
            }
            if (!ok) continue;
            Signature inner(rule.inner.orbit_genus, inner_periods);
            Signature outer(rule.outer.orbit_genus, outer_periods);
            if (!(inner.measure() > Rat(0)) || !(outer.measure() > Rat(0))) continue;
            INFO(rule.case_id << " inner " << inner.str() << " outer " << outer.str());
            CHECK(inner.measure() / outer.measure() == Rat(rule.index));
        }
    }
}

TEST_CASE("pattern matcher agrees with naive row instantiation for small signatures") {
    // all triangle signatures with periods <= 20 and small quadrilaterals
    std::vector<Signature> sigs;
    for (int a = 2; a <= 20; ++a)
        for (int b = a; b <= 20; ++b)
            for (int c = b; c <= 20; ++c) sigs.push_back(Signature(0, {a, b, c}));
    for (int a = 2; a <= 8; ++a)
        for (int b = a; b <= 8; ++b)
            for (int c = b; c <= 8; ++c)
                for (int d = c; d <= 8; ++d) sigs.push_back(Signature(0, {a, b, c, d}));

    // naive: instantiate every rule over t,u,n <= 80 and index by inner signature
    std::map<std::string, std::set<std::string>> expected;  // sig -> set of case|outer
    for (const auto& rule : singerman_rules()) {
        std::set<std::string> vars;
        for (const auto& t : rule.inner.terms)
            if (!t.var.empty()) vars.insert(t.var);
        std::vector<std::map<std::string, int>> grids;
        if (vars.empty()) grids.push_back({});
        else if (vars.size() == 1) {
            for (int a = 1; a <= 80; ++a) grids.push_back({{*vars.begin(), a}});
        } else {
            auto it = vars.begin();
            std::string v1 = *it++, v2 = *it;
            for (int a = 1; a <= 80; ++a)
                for (int b = 1; b <= 80; ++b) grids.push_back({{v1, a}, {v2, b}});
        }
        for (const auto& asg : grids) {
            bool ok = true;
            std::vector<int> inner_periods, outer_periods;
            for (const auto& t : rule.inner.terms) {
                int val = t.coef * (t.var.empty() ? 1 : asg.at(t.var));
                if (val < 2) ok = false;
                inner_periods.push_back(val);
            }
            for (const auto& t : rule.outer.terms)
                outer_periods.push_back(t.coef * (t.var.empty() ? 1 : asg.at(t.var)));
            for (const auto& c : rule.constraints) {
                int s = 0;
                for (const auto& v : c.vars) s += asg.at(v);
                if (s < c.bound) ok = false;
            }
            if (!ok) continue;
            Signature inner(rule.inner.orbit_genus, inner_periods);
            Signature outer(rule.outer.orbit_genus, outer_periods);
            if (!(outer.measure() > Rat(0))) continue;
            expected[inner.canonical().str()].insert(rule.case_id + "|" + outer.canonical().str());
        }
    }
    for (const auto& s : sigs) {
        auto ms = singerman_overgroups(s);
        std::set<std::string> got;
        for (const auto& m : ms) got.insert(m.rule.case_id + "|" + m.outer.str());
        auto it = expected.find(s.canonical().str());
        std::set<std::string> want = it == expected.end() ? std::set<std::string>{} : it->second;
        INFO("signature " << s.str());
        REQUIRE(got == want);
    }
}

TEST_CASE("cond1 case (4): abelian vector with c1=c2, c3=c4 extends") {
    auto g = abelian_group({2, 4});
    // find a (0;t,t,u,u) vector with equal pairs
    auto vectors = enumerate_generating_vectors(g, parse_signature("0;4,4,4,4"));
    bool found_equal_pair = false;
    for (const auto& v : vectors) {
        if (v.elliptic_part[0] == v.elliptic_part[1] && v.elliptic_part[2] == v.elliptic_part[3]) {
            found_equal_pair = true;
            CHECK(cond1_case4(g, v) == CondVerdict::extends);
        }
    }
    CHECK(found_equal_pair);
}

TEST_CASE("cond1 case (2) on the C2 (1;2,2) vector extends") {
    auto c2 = cyclic_group(2);
    GeneratingVector v;
    v.signature = parse_signature("1;2,2");
    v.hyperbolic_part = {1, 1};
    v.elliptic_part = {1, 1};
    REQUIRE(generating_vector_valid(c2, v));
    CHECK(cond1_case2(c2, v) == CondVerdict::extends);
    CHECK(cond1_test(c2, v) == CondVerdict::extends);
}

TEST_CASE("a dihedral (0;t,t,u,u) witness that does not extend") {
    // D10 with (0;2,2,5,5): genus check 2 = -10 + 5(1/2+1/2+4/5+4/5) + 1
    auto d10 = dihedral_group(5, "D10");
    auto vectors = enumerate_generating_vectors(d10, parse_signature("0;2,2,5,5"));
    REQUIRE(!vectors.empty());
    bool some_fail = false;
    for (const auto& v : vectors)
        if (cond1_test(d10, v) == CondVerdict::does_not_extend) some_fail = true;
    CHECK(some_fail);
}

TEST_CASE("cond2 case (2) on the classic C5 witness") {
    auto c5 = cyclic_group(5);
    auto v = cyclic_vector(c5, {1, 1, 3}, parse_signature("0;5,5,5"));
    REQUIRE(generating_vector_valid(c5, v));
    CHECK(cond2_case2(c5, v) == CondVerdict::extends);
    auto res = cond2_test(c5, v, &test_catalog());
    CHECK(res.verdict == CondVerdict::extends);
}

TEST_CASE("the ex-cyclic congruence: case (2) on C_nm reduces to a^2 = 1 mod nm") {
    // (0;mn,mn,n) vectors of C_mn normalized to (x, x^a, x^(nm-a-1))
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 4}, {2, 6}, {3, 4}, {4, 4}, {2, 10}}) {
        int nm = n * m;
        auto g = cyclic_group(nm);
        for (int a = 1; a < nm; ++a) {
            if (std::gcd(a, nm) != 1) continue;
            int c = ((nm - a - 1) % nm + nm) % nm;
            if (std::gcd(c, nm) != nm / n) continue;  // third entry must have order n
            GeneratingVector v;
            v.signature = Signature(0, {nm, nm, n});
            v.elliptic_part = {g.pow(1, 1), g.pow(1, a), g.pow(1, c)};
            if (!generating_vector_valid(g, v)) continue;
            bool extends = cond2_case2(g, v) == CondVerdict::extends;
            bool congruence = (static_cast<long long>(a) * a) % nm == 1;
            INFO("n=" << n << " m=" << m << " a=" << a);
            CHECK(extends == congruence);
        }
    }
}

TEST_CASE("subgroup signature of the index-2 containment (0;2,5,10) -> (0;5,5,5)") {
    auto c10 = cyclic_group(10);
    // outer vector: orders (2, 5, 10)
    auto vecs = enumerate_generating_vectors(c10, parse_signature("0;2,5,10"));
    REQUIRE(!vecs.empty());
    const auto& v = vecs.front();
    auto sub = generated_subgroup(c10, {c10.pow(1, 2)});  // C5 inside C10
    auto cosets = coset_space(c10, sub);
    REQUIRE(cosets.size() == 2);
    std::vector<std::vector<int>> perms;
    for (int c : v.elliptic_part) perms.push_back(coset_permutation(c10, cosets, c));
    auto inner = subgroup_signature(v.signature, perms, 2);
    CHECK(inner.str() == "0;5,5,5");
}

TEST_CASE("index-1 subgroup signature is the outer signature") {
    Signature outer = parse_signature("0;2,5,10");
    std::vector<std::vector<int>> trivial_perms{{0}, {0}, {0}};
    CHECK(subgroup_signature(outer, trivial_perms, 1) == outer);
}

TEST_CASE("N4 cycle rule: (0;2,2,2,3) index 4 action restricts to (0;3,3,3,3)") {
    // D12 (order 12) acts on genus 2 with (0;2,2,2,3); its C3 has index 4
    auto d12 = dihedral_group(6, "D12");
    REQUIRE(rh_genus(parse_signature("0;2,2,2,3"), 12) == Rat(2));
    auto vecs = enumerate_generating_vectors(d12, parse_signature("0;2,2,2,3"));
    REQUIRE(!vecs.empty());
    int order3 = -1;
    for (int x = 0; x < d12.order; ++x)
        if (d12.element_order[x] == 3) { order3 = x; break; }
    auto sub = generated_subgroup(d12, {order3});
    REQUIRE(sub.size() == 3);
    bool found = false;
    for (const auto& v : vecs) {
        auto cosets = coset_space(d12, sub);
        REQUIRE(cosets.size() == 4);
        std::vector<std::vector<int>> perms;
        for (int c : v.elliptic_part) perms.push_back(coset_permutation(d12, cosets, c));
        // transitivity of the coset action
        std::vector<bool> reach(4, false);
        reach[0] = true;
        for (int pass = 0; pass < 4; ++pass)
            for (const auto& p : perms)
                for (int i = 0; i < 4; ++i)
                    if (reach[i]) reach[p[i]] = true;
        if (!std::all_of(reach.begin(), reach.end(), [](bool b) { return b; })) continue;
        auto inner = subgroup_signature(v.signature, perms, 4);
        if (inner.str() == "0;3,3,3,3") found = true;
    }
    CHECK(found);
}

TEST_CASE("extension search: C5 (0;5,5,5) extends to C10 with (0;2,5,10)") {
    auto c5 = cyclic_group(5);
    auto res = extension_search(c5, parse_signature("0;5,5,5"), test_catalog());
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->overgroup_label == "C10");
    CHECK(res.witness->outer_signature.str() == "0;2,5,10");
    CHECK(res.witness->rule_case == "N8");
    CHECK(res.witness->index == 2);
    CHECK_FALSE(res.relative_to_catalog);
}

TEST_CASE("extension search absence for the Hurwitz signature") {
    auto cat = test_catalog();
    const auto* psl = cat.find_by_label("PSL(2,7)");
    REQUIRE(psl != nullptr);
    auto res = extension_search(psl->group, parse_signature("0;2,3,7"), cat);
    CHECK_FALSE(res.witness.has_value());
}

TEST_CASE("maximality verdicts from the worked examples") {
    auto cat = test_catalog();

    auto c5 = cyclic_group(5);
    auto a5 = analyze_maximality(c5, parse_signature("0;5,5,5"), cat);
    CHECK(a5.verdict == Maximality::never_maximal);
    CHECK(a5.vectors_examined == 12);
    CHECK(a5.vectors_extending == 12);
    REQUIRE(a5.extension.has_value());
    CHECK(a5.extension->overgroup_label == "C10");

    auto c10 = cyclic_group(10);
    auto a10 = analyze_maximality(c10, parse_signature("0;2,5,10"), cat);
    CHECK(a10.verdict == Maximality::maximal_witness_exists);
    CHECK_FALSE(a10.relative_to_catalog);
}

TEST_CASE("ex-cyclic verdicts: C40 never maximal, C64 has a maximal witness") {
    auto cat = test_catalog();

    auto c40 = cyclic_group(40);
    auto a40 = analyze_maximality(c40, Signature(0, {40, 40, 4}), cat);
    CHECK(a40.verdict == Maximality::never_maximal);

    auto c64 = cyclic_group(64);
    auto a64 = analyze_maximality(c64, Signature(0, {64, 64, 8}), cat);
    CHECK(a64.verdict == Maximality::maximal_witness_exists);
    CHECK_FALSE(a64.relative_to_catalog);
}

TEST_CASE("fused surface counts from the worked examples") {
    auto cat = test_catalog();

    auto f5 = fuse_surface_count(cyclic_group(5), parse_signature("0;5,5,5"), cat);
    CHECK(f5.exact);
    CHECK(f5.count == 1);

    auto f10 = fuse_surface_count(cyclic_group(10), parse_signature("0;2,5,10"), cat);
    CHECK(f10.exact);
    CHECK(f10.count == 1);
}

TEST_CASE("fusion bounds never escape [1, classes]") {
    auto cat = test_catalog();
    for (auto& [g, sigtext] :
         std::vector<std::pair<FiniteGroup, const char*>>{{cyclic_group(8), "0;2,8,8"},
                                                          {cyclic_group(12), "0;2,12,12"},
                                                          {dicyclic_group(2, "Q8"), "0;4,4,4"}}) {
        auto sig = parse_signature(sigtext);
        auto classes = count_epimorphism_classes(g, sig).classes;
        if (classes == 0) continue;
        auto f = fuse_surface_count(g, sig, cat);
        INFO(g.label << " " << sigtext);
        if (f.exact) {
            CHECK(f.count >= 1);
            CHECK(f.count <= classes);
        } else {
            CHECK(f.lower >= 1);
            CHECK(f.upper <= classes);
        }
    }
}

TEST_CASE("superelliptic non-maximal tables") {
    // (C_m, (0;mn,mn,n)) -> (D_m, (0;2,mn,2n)) with m = 10, n = 4
    ReducedKind cm{ReducedKind::C, 10};
    auto rows = superelliptic_nonmax_tables(cm, Signature(0, {40, 40, 4}));
    REQUIRE(!rows.empty());
    bool found = false;
    for (const auto& r : rows)
        if (r.extended.family == ReducedKind::D && r.extended.m == 10 &&
            r.outer == Signature(0, {2, 40, 8}))
            found = true;
    CHECK(found);

    // (A4, (0;2n,3,3)) -> (S4, (0;2,3,4n)) with n = 5
    ReducedKind a4{ReducedKind::A4, 1};
    auto rows2 = superelliptic_nonmax_tables(a4, Signature(0, {10, 3, 3}));
    REQUIRE(!rows2.empty());
    bool found2 = false;
    for (const auto& r : rows2)
        if (r.extended.family == ReducedKind::S4 && r.outer == Signature(0, {2, 3, 20}))
            found2 = true;
    CHECK(found2);

    // S4 and A5 never extend
    CHECK(superelliptic_nonmax_tables({ReducedKind::S4, 1}, Signature(0, {2, 3, 8})).empty());
    CHECK(superelliptic_nonmax_tables({ReducedKind::A5, 1}, Signature(0, {2, 3, 10})).empty());
}
