#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "curveaut/catalog.hpp"
#include "curveaut/superelliptic.hpp"
#include "curveaut/table1.hpp"

using namespace curveaut;

TEST_CASE("finite field basics") {
    GF f7(7);
    CHECK(f7.q() == 7);
    CHECK(f7.mul(3, 5) == 1);
    CHECK(f7.inv(3) == 5);

    GF f9(3, 2);
    CHECK(f9.q() == 9);
    int i = f9.root_of_unity(4);
    CHECK(f9.mul(i, i) == f9.neg(1));  // i^2 = -1
    CHECK(f9.subfield_elements(1).size() == 3);

    GF f8(2, 3);
    CHECK(f8.q() == 8);
    CHECK(f8.mult_order(f8.primitive_element()) == 7);
}

TEST_CASE("polynomial arithmetic and gcd") {
    GF f5(5);
    Poly a(&f5, {1, 0, 1});     // x^2 + 1
    Poly b(&f5, {4, 1});        // x + 4 = x - 1
    auto [q, r] = a.divmod(b);
    CHECK((q * b + r) == a);
    // x^2 - 1 = (x-1)(x+1)
    Poly c(&f5, {4, 0, 1});
    CHECK(poly_gcd(c, b).degree() == 1);
}

TEST_CASE("squarefree decomposition in characteristic p") {
    GF f3(3);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff(0, 2), multd(1, 5), rootd(0, 2);
    for (int trial = 0; trial < 60; ++trial) {
        // build a product of distinct linear factors with random multiplicities
        std::set<int> roots;
        int nroots = 1 + trial % 3;
        while (static_cast<int>(roots.size()) < nroots) roots.insert(rootd(rng));
        Poly f = Poly::constant(f3, 1);
        std::map<long long, int> expected;  // multiplicity -> count of roots
        for (int r : roots) {
            long long m = multd(rng);
            expected[m] += 1;
            Poly lin(&f3, {f3.neg(r), 1});
            f = f * lin.pow(m);
        }
        auto dec = squarefree_decomposition(f);
        std::map<long long, int> got;
        Poly rebuilt = Poly::constant(f3, 1);
        for (auto& [m, factor] : dec) {
            got[m] += factor.degree();
            rebuilt = rebuilt * factor.pow(m);
        }
        INFO("trial " << trial);
        CHECK(got == expected);
        CHECK(rebuilt.monic() == f.monic());
    }
}

TEST_CASE("table 1 case 1: z = x^m for C_m") {
    auto inst = table1_function(1, {.p = 5, .m = 4});
    CHECK(inst.z.map_degree() == 4);
    CHECK(inst.reduced_order == 4);
    auto rep = verify_invariance(inst);
    CHECK(rep.all_invariant);
    CHECK(rep.group_order == 4);
    auto ram = verify_ramification(inst);
    CHECK(ram.confirmed);
    CHECK(ram.found_orders == std::vector<long long>{4, 4});
}

TEST_CASE("table 1 case 2: z = x^m + 1/x^m over F7") {
    auto inst = table1_function(2, {.p = 7, .m = 3});
    CHECK(inst.z.map_degree() == 6);
    CHECK(inst.reduced_order == 6);
    auto rep = verify_invariance(inst);
    CHECK(rep.all_invariant);
    CHECK(rep.group_order == 6);
    auto ram = verify_ramification(inst);
    CHECK(ram.confirmed);
    CHECK(ram.found_orders == std::vector<long long>{2, 2, 3});
}

TEST_CASE("table 1 case 3: the A4 function") {
    auto inst = table1_function(3, {.p = 7});
    CHECK(inst.z.map_degree() == 12);
    auto rep = verify_invariance(inst);
    CHECK(rep.all_invariant);
    CHECK(rep.group_order == 12);
    auto ram = verify_ramification(inst);
    INFO("found orders count " << ram.found_orders.size());
    CHECK(ram.confirmed);
    CHECK(ram.found_orders == std::vector<long long>{2, 3, 3});
}

TEST_CASE("table 1 case 4: the S4 function has degree 24") {
    auto inst = table1_function(4, {.p = 13});
    CHECK(inst.z.map_degree() == 24);
    CHECK(inst.reduced_order == 24);
    auto rep = verify_invariance(inst);
    CHECK(rep.all_invariant);
    CHECK(rep.group_order == 24);
    auto ram = verify_ramification(inst);
    CHECK(ram.confirmed);
    CHECK(ram.found_orders == std::vector<long long>{2, 3, 4});
}

TEST_CASE("table 1 case 5: A5 over F11 and the wild p=3 row") {
    auto inst = table1_function(5, {.p = 11});
    CHECK(inst.z.map_degree() == 60);
    auto rep = verify_invariance(inst);
    CHECK(rep.all_invariant);
    CHECK(rep.group_order == 60);

    auto wild = table1_function(5, {.p = 3});
    CHECK(wild.z.map_degree() == 60);
    CHECK(wild.field->q() == 81);
    auto repw = verify_invariance(wild);
    CHECK(repw.all_invariant);
    CHECK(repw.group_order == 60);
    auto ramw = verify_ramification(wild);
    CHECK(ramw.confirmed);
    CHECK(ramw.found_orders == std::vector<long long>{5, 6});
}

TEST_CASE("table 1 case 6: wild U row") {
    auto inst = table1_function(6, {.p = 3, .t = 1});
    CHECK(inst.z.map_degree() == 3);
    auto rep = verify_invariance(inst);
    CHECK(rep.all_invariant);
    CHECK(rep.group_order == 3);
    auto ram = verify_ramification(inst);
    CHECK(ram.confirmed);
    CHECK(ram.found_orders == std::vector<long long>{3});

    auto inst2 = table1_function(6, {.p = 2, .t = 2});
    CHECK(inst2.z.map_degree() == 4);
    CHECK(verify_invariance(inst2).all_invariant);
}

TEST_CASE("table 1 case 7: K_m row") {
    auto inst = table1_function(7, {.p = 3, .m = 2, .t = 1});
    CHECK(inst.reduced_order == 6);
    CHECK(inst.z.map_degree() == 6);
    auto rep = verify_invariance(inst);
    CHECK(rep.all_invariant);
    CHECK(rep.group_order == 6);
    auto ram = verify_ramification(inst);
    CHECK(ram.confirmed);
    std::vector<long long> expected{2, 6};
    CHECK(ram.found_orders == expected);
}

TEST_CASE("table 1 cases 8 and 9: projective rows over F3") {
    auto psl = table1_function(8, {.p = 3, .f = 1});
    CHECK(psl.z.map_degree() == 12);  // |PSL(2,3)|
    auto rep = verify_invariance(psl);
    CHECK(rep.all_invariant);
    CHECK(rep.group_order == 12);

    auto pgl = table1_function(9, {.p = 3, .f = 1});
    CHECK(pgl.z.map_degree() == 24);  // |PGL(2,3)|
    auto repg = verify_invariance(pgl);
    CHECK(repg.all_invariant);
    CHECK(repg.group_order == 24);
}

TEST_CASE("inadmissible characteristics are rejected") {
    CHECK_THROWS_AS(table1_function(3, {.p = 3}), parameter_error);
    CHECK_THROWS_AS(table1_function(4, {.p = 2}), parameter_error);
    CHECK_THROWS_AS(table1_function(1, {.p = 5, .m = 10}), parameter_error);
    CHECK_THROWS_AS(table1_function(5, {.p = 5}), parameter_error);
}

TEST_CASE("cyclic curve genus on worked examples") {
    CHECK(cyclic_curve_genus({2, {1, 1, 1, 1, 1, 1, 1, 1}, 0}) == 3);
    CHECK(cyclic_curve_genus({3, {1, 1, 1, 1, 1, 1}, 0}) == 4);
    CHECK(cyclic_curve_genus({5, {1, 1, 1, 2}, 0}) == 4);
}

TEST_CASE("cyclic curve canonical-form violations") {
    CHECK_THROWS_AS(cyclic_curve_genus({2, {1, 1, 1}, 0}), parameter_error);   // sum not divisible
    CHECK_THROWS_AS(cyclic_curve_genus({4, {2, 2, 4}, 0}), parameter_error);   // n_i >= n
    CHECK_THROWS_AS(cyclic_curve_genus({6, {2, 4}, 0}), parameter_error);      // gcd != 1
    CHECK_THROWS_AS(cyclic_curve_genus({3, {1, 1, 1}, 3}), parameter_error);   // p | n
}

TEST_CASE("cyclic curve genus equals the tame cover genus of its signature") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> nd(2, 12), td(2, 8), ed(1, 11);
    int done = 0;
    while (done < 200) {
        int n = nd(rng), t = td(rng);
        std::vector<int> exps;
        for (int i = 0; i < t; ++i) exps.push_back(1 + ed(rng) % (n - 1));
        CyclicCurveData d{n, exps, 0};
        try {
            d.validate();
        } catch (const parameter_error&) {
            continue;
        }
        std::vector<int> periods;
        CoverData c;
        c.degree = n;
        c.base_genus = 0;
        for (int e : exps) {
            int ei = n / std::gcd(n, e);
            if (ei > 1) {
                periods.push_back(ei);
                // each a_i is one base place; the degree factor counts the
                // points upstairs
                c.ramified_places.push_back({ei, 1, 1, 1, std::nullopt});
            }
        }
        long long g = cyclic_curve_genus(d);
        Rat g2 = cover_genus(c);
        INFO("n=" << n);
        REQUIRE(g2.is_integer());
        CHECK(g == g2.as_integer());
        ++done;
    }
}

TEST_CASE("char-2 ramification types for genus 3 and 4 match the stated lists") {
    auto t3 = char2_ramification_types(3);
    std::vector<std::vector<int>> want3{{1, 1, 1, 1}, {3, 1, 1}, {3, 3}, {5, 1}, {7}};
    CHECK(t3 == want3);

    auto t4 = char2_ramification_types(4);
    std::vector<std::vector<int>> want4{{1, 1, 1, 1, 1}, {3, 1, 1, 1}, {3, 3, 1},
                                        {5, 1, 1},       {5, 3},      {7, 1},    {9}};
    CHECK(t4 == want4);

    auto t2 = char2_ramification_types(2);
    std::vector<std::vector<int>> want2{{1, 1, 1}, {3, 1}, {5}};
    CHECK(t2 == want2);
}

TEST_CASE("char-2 types satisfy the degree equation with odd parts, exhaustively") {
    for (int g = 2; g <= 8; ++g) {
        auto types = char2_ramification_types(g);
        std::set<std::vector<int>> seen;
        for (const auto& t : types) {
            long long sum = 0;
            for (int na : t) {
                CHECK(na % 2 == 1);
                sum += na + 1;
            }
            CHECK(sum == 2 * g + 2);
            CHECK(seen.insert(t).second);
            CHECK(std::is_sorted(t.rbegin(), t.rend()));
        }
        // completeness oracle: exhaustive partitions of 2g+2 into even parts
        std::function<int(int, int)> count = [&](int rem, int maxp) -> int {
            if (rem == 0) return 1;
            int c = 0;
            for (int part = std::min(maxp, rem); part >= 2; part -= 2)
                c += count(rem - part, part);
            return c;
        };
        CHECK(static_cast<int>(types.size()) == count(2 * g + 2, 2 * g + 2));
    }
}

TEST_CASE("char-2 hyperelliptic group labels resolve in the catalog") {
    auto cat = builtin_catalog();
    for (int g : {3, 4}) {
        for (const auto& label : char2_hyperelliptic_groups(g)) {
            INFO("genus " << g << " label " << label);
            const auto* e = cat.find_by_label(label);
            REQUIRE(e != nullptr);
        }
    }
    CHECK(char2_hyperelliptic_groups(3).size() == 7);
    CHECK(char2_hyperelliptic_groups(4).size() == 7);
    CHECK_THROWS_AS(char2_hyperelliptic_groups(5), parameter_error);
}

TEST_CASE("genus 3/4 lists match the stated sizes and resolve where pinned") {
    auto cat = builtin_catalog();
    auto l3_3 = genus34_superelliptic_lists(3, 3);
    CHECK(l3_3.size() == 18);
    CHECK(l3_3[0] == std::pair<int, int>{2, 1});
    CHECK(l3_3[1] == std::pair<int, int>{4, 2});
    CHECK(l3_3[2] == std::pair<int, int>{3, 1});

    auto l3_big = genus34_superelliptic_lists(3, 11);
    CHECK(l3_big.size() == 26);
    CHECK(std::count(l3_big.begin(), l3_big.end(), std::pair<int, int>{48, 33}) == 1);
    CHECK(std::count(l3_big.begin(), l3_big.end(), std::pair<int, int>{48, 48}) == 1);

    auto l4_5 = genus34_superelliptic_lists(4, 5);
    CHECK(std::count(l4_5.begin(), l4_5.end(), std::pair<int, int>{72, 42}) == 1);

    // resolution: ids with order <= 31 are pinned by the builtin catalog
    int resolved = 0, unresolved = 0;
    for (auto id : l3_big) {
        auto r = resolve_small_group_id(cat, id);
        if (id.first <= 31) {
            INFO("id (" << id.first << "," << id.second << ")");
            CHECK(r.resolved);
        }
        r.resolved ? ++resolved : ++unresolved;
    }
    CHECK(resolved >= 22);
    // (48,48) is pinned among the extras
    CHECK(resolve_small_group_id(cat, {48, 48}).resolved);
}

TEST_CASE("genus lists reject unsupported characteristics") {
    CHECK_THROWS_AS(genus34_superelliptic_lists(3, 2), parameter_error);
    CHECK_THROWS_AS(genus34_superelliptic_lists(5, 3), parameter_error);
}

TEST_CASE("reduced groups") {
    auto c10 = cyclic_group(10);
    auto r1 = reduced_group(c10, find_central_cyclic_generator(c10, 5), 5);
    REQUIRE(r1.kind.has_value());
    CHECK(r1.kind->family == ReducedKind::C);
    CHECK(r1.kind->m == 2);

    auto d12 = dihedral_group(6, "D12");
    auto r2 = reduced_group(d12, find_central_cyclic_generator(d12, 2), 2);
    REQUIRE(r2.kind.has_value());
    CHECK(r2.kind->family == ReducedKind::D);
    CHECK(r2.kind->m == 3);  // order-6 dihedral quotient, S3

    auto a4c3 = direct_product(alternating_group(4), cyclic_group(3), "A4xC3");
    auto r3 = reduced_group(a4c3, find_central_cyclic_generator(a4c3, 3), 3);
    REQUIRE(r3.kind.has_value());
    CHECK(r3.kind->family == ReducedKind::A4);

    // non-normal designated subgroup
    auto s3 = symmetric_group(3);
    int refl = -1;
    for (int x = 0; x < s3.order; ++x)
        if (s3.element_order[x] == 2) { refl = x; break; }
    CHECK_THROWS_AS(reduced_group(s3, refl, 2), parameter_error);
}
