#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "curveaut/character.hpp"
#include "curveaut/conjugacy.hpp"
#include "curveaut/constructors.hpp"
#include "curveaut/group.hpp"
#include "curveaut/morphisms.hpp"
#include "curveaut/subgroups.hpp"

using namespace curveaut;

namespace {

long long euler_phi(long long n) {
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace

TEST_CASE("standard constructors pass the group axioms") {
    std::vector<FiniteGroup> gs;
    gs.push_back(cyclic_group(1));
    gs.push_back(cyclic_group(12));
    gs.push_back(dihedral_group(6));
    gs.push_back(abelian_group({2, 4, 3}));
    gs.push_back(symmetric_group(4));
    gs.push_back(alternating_group(5));
    gs.push_back(dicyclic_group(3));
    gs.push_back(semidirect_cyclic(7, 2, 3));
    gs.push_back(direct_product(cyclic_group(3), dihedral_group(4)));
    for (const auto& g : gs) {
        std::string why;
        INFO(g.label << ": " << why);
        CHECK(group_axioms_ok(g, &why));
    }
}

TEST_CASE("cyclic group of order 5") {
    auto g = cyclic_group(5);
    REQUIRE(g.order == 5);
    auto cc = conjugacy_classes(g);
    CHECK(cc.count() == 5);
    for (int s : cc.sizes) CHECK(s == 1);
}

TEST_CASE("dihedral of order 12 basics") {
    auto g = dihedral_group(6);
    REQUIRE(g.order == 12);
    CHECK(g.label == "D12");
    CHECK_FALSE(g.is_abelian());
}

TEST_CASE("order 21 semidirect product is nonabelian and unique") {
    auto g = semidirect_cyclic(7, 2, 3);
    REQUIRE(g.order == 21);
    CHECK_FALSE(g.is_abelian());
    CHECK_FALSE(is_isomorphic(g, cyclic_group(21)));
    // the other valid action parameter gives an isomorphic group
    auto h = semidirect_cyclic(7, 4, 3);
    CHECK(is_isomorphic(g, h));
}

TEST_CASE("semidirect rejects invalid action parameters") {
    CHECK_THROWS_AS(semidirect_cyclic(7, 3, 3), parameter_error);   // 3^3 = 27 != 1 mod 7
    CHECK_THROWS_AS(semidirect_cyclic(6, 2, 2), parameter_error);   // gcd(2,6) != 1
}

TEST_CASE("conjugacy classes of S3 and D8") {
    auto s3 = symmetric_group(3);
    auto cc = conjugacy_classes(s3);
    REQUIRE(cc.count() == 3);
    std::vector<int> sizes = cc.sizes;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 2, 3});

    auto d8 = dihedral_group(4);
    CHECK(conjugacy_classes(d8).count() == 5);
}

TEST_CASE("class sizes sum to |G| and divide |G|") {
    for (const auto& g : {dihedral_group(6), symmetric_group(4), dicyclic_group(5),
                          semidirect_cyclic(7, 2, 3)}) {
        auto cc = conjugacy_classes(g);
        CHECK(std::accumulate(cc.sizes.begin(), cc.sizes.end(), 0) == g.order);
        for (int s : cc.sizes) CHECK(g.order % s == 0);
        for (int c = 0; c < cc.count(); ++c) {
            int rep_order = g.element_order[cc.representatives[c]];
            for (int x = 0; x < g.order; ++x)
                if (cc.class_of[x] == c) CHECK(g.element_order[x] == rep_order);
        }
    }
}

TEST_CASE("automorphism group orders of small groups") {
    CHECK(automorphism_group_order(cyclic_group(5)) == 4);
    CHECK(automorphism_group_order(cyclic_group(10)) == 4);
    CHECK(automorphism_group_order(abelian_group({2, 2})) == 6);
    CHECK(automorphism_group_order(symmetric_group(3)) == 6);
    CHECK(automorphism_group_order(dihedral_group(4)) == 8);
}

TEST_CASE("Aut(C_n) = phi(n) for n <= 50") {
    for (int n = 1; n <= 50; ++n) {
        INFO("n = " << n);
        CHECK(automorphism_group_order(cyclic_group(n)) == euler_phi(n));
    }
}

TEST_CASE("returned automorphisms are multiplicative bijections") {
    auto g = dihedral_group(5);
    auto aut = automorphism_group(g);
    CHECK(aut.order == 20);  // Aut(D10) = Hol(C5)
    for (const auto& phi : aut.automorphisms) {
        std::vector<bool> seen(g.order, false);
        for (int v : phi) {
            CHECK_FALSE(seen[v]);
            seen[v] = true;
        }
        for (int a = 0; a < g.order; ++a)
            for (int b = 0; b < g.order; ++b) REQUIRE(phi[g.op(a, b)] == g.op(phi[a], phi[b]));
    }
}

TEST_CASE("subgroups up to conjugacy") {
    auto c5 = cyclic_group(5);
    CHECK(subgroups_up_to_conjugacy(c5).size() == 2);

    auto c10 = cyclic_group(10);
    CHECK(subgroups_up_to_conjugacy(c10).size() == 4);

    auto d8 = dihedral_group(4);
    CHECK(subgroups_up_to_conjugacy(d8).size() == 8);

    auto s4 = symmetric_group(4);
    CHECK(subgroups_up_to_conjugacy(s4).size() == 11);
}

TEST_CASE("isomorphism fast rejections and equivalence behavior") {
    CHECK_FALSE(is_isomorphic(cyclic_group(4), abelian_group({2, 2})));
    CHECK_FALSE(is_isomorphic(dihedral_group(6), abelian_group({6, 2})));
    CHECK(is_isomorphic(dihedral_group(3), symmetric_group(3)));
    CHECK(is_isomorphic(dicyclic_group(2), dicyclic_group(2)));

    // reflexive, symmetric, transitive on a small sample
    std::vector<FiniteGroup> sample{cyclic_group(8), abelian_group({4, 2}), dihedral_group(4),
                                    dicyclic_group(2)};
    for (const auto& a : sample) CHECK(is_isomorphic(a, a));
    for (const auto& a : sample)
        for (const auto& b : sample) CHECK(is_isomorphic(a, b) == is_isomorphic(b, a));
}

TEST_CASE("quotient groups") {
    auto c10 = cyclic_group(10);
    auto sub = generated_subgroup(c10, {c10.pow(1, 2) /* element of order 5 */});
    REQUIRE(sub.size() == 5);
    auto q = quotient_group(c10, sub);
    CHECK(q.order == 2);

    auto d12 = dihedral_group(6);
    auto z = d12.center();
    REQUIRE(z.size() == 2);
    auto q2 = quotient_group(d12, z);
    CHECK(is_isomorphic(q2, symmetric_group(3)));
}

TEST_CASE("permutation round trip preserves the group") {
    for (const auto& g : {dihedral_group(6), semidirect_cyclic(7, 2, 3), dicyclic_group(3)}) {
        auto gens = regular_representation_generators(g);
        auto h = group_from_permutations(gens, g.label + "_rt");
        CHECK(h.order == g.order);
        CHECK(is_isomorphic(g, h));
    }
}

TEST_CASE("abelian character tables are exactly orthogonal") {
    for (const auto& g : {cyclic_group(2), cyclic_group(3), abelian_group({2, 2}),
                          abelian_group({4, 3}), abelian_group({2, 2, 3})}) {
        auto t = abelian_character_table(g);
        REQUIRE(t.class_count() == g.order);
        REQUIRE(static_cast<int>(t.rows.size()) == g.order);
        std::string why;
        INFO(g.label << ": " << why);
        CHECK(character_rows_orthogonal(t, &why));
        CHECK(character_columns_orthogonal(t, &why));
    }
}

TEST_CASE("character table of C2 is [[1,1],[1,-1]]") {
    auto t = abelian_character_table(cyclic_group(2));
    REQUIRE(t.rows.size() == 2);
    // one row is all ones, the other has chi(x) = -1
    int all_ones = -1, signed_row = -1;
    for (int i = 0; i < 2; ++i) {
        if (t.rows[i][0].rational_value() == Rat(1) && t.rows[i][1].rational_value() == Rat(1))
            all_ones = i;
        if (t.rows[i][1].is_rational() && t.rows[i][1].rational_value() == Rat(-1)) signed_row = i;
    }
    CHECK(all_ones != -1);
    CHECK(signed_row != -1);
}

TEST_CASE("nonabelian input is rejected by the abelian table builder") {
    CHECK_THROWS_AS(abelian_character_table(symmetric_group(3)), parameter_error);
}

TEST_CASE("PSL(2,7) construction") {
    auto g = projective_group_2(7, true, "PSL(2,7)");
    REQUIRE(g.order == 168);
    std::string why;
    CHECK(group_axioms_ok(g, &why));
    auto spectrum = g.order_spectrum();
    CHECK(spectrum == std::vector<int>{1, 2, 3, 4, 7});
}

TEST_CASE("matrix groups over F3") {
    auto sl23 = matrix_group_2x2(3, true, "SL(2,3)");
    CHECK(sl23.order == 24);
    auto gl23 = matrix_group_2x2(3, false, "GL(2,3)");
    CHECK(gl23.order == 48);
}
