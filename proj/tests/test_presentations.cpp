#include <catch2/catch_amalgamated.hpp>

#include "curveaut/constructors.hpp"
#include "curveaut/morphisms.hpp"
#include "curveaut/presentations.hpp"

using namespace curveaut;

TEST_CASE("C_mn case gives the cyclic group") {
    auto g = construct_presented_th14("C_mn", {.n = 4, .m = 3});
    CHECK(g.group.order == 12);
    CHECK(is_isomorphic(g.group, cyclic_group(12)));
    CHECK(g.group.element_order[g.r] == 4);
}

TEST_CASE("G6 = dihedral of order 2mn") {
    auto g = construct_presented_th14("G6", {.n = 2, .m = 3});
    CHECK(g.group.order == 12);
    CHECK(is_isomorphic(g.group, dihedral_group(6)));
}

TEST_CASE("metacyclic case matches the standard semidirect product") {
    auto g = construct_presented_th14("metacyclic", {.n = 7, .m = 3, .l = 2});
    CHECK(g.group.order == 21);
    CHECK(is_isomorphic(g.group, semidirect_cyclic(7, 2, 3)));
    CHECK_THROWS_AS(construct_presented_th14("metacyclic", {.n = 7, .m = 3, .l = 3}),
                    parameter_error);
}

TEST_CASE("dihedral-family normal forms satisfy their presentations") {
    // G5 and G8 (where t inverts r) are consistent only for even m
    for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {6, 4}, {4, 6}}) {
        INFO("G5 n=" << n << " m=" << m);
        auto g = construct_presented_th14("G5", {.n = n, .m = m});
        CHECK(g.group.order == 2 * m * n);
        std::string why;
        CHECK(group_axioms_ok(g.group, &why));
    }
    for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {5, 2}, {6, 4}, {2, 5}}) {
        INFO("G7 n=" << n << " m=" << m);
        auto g = construct_presented_th14("G7", {.n = n, .m = m});
        CHECK(g.group.order == 2 * m * n);
        std::string why;
        CHECK(group_axioms_ok(g.group, &why));
    }
    for (auto [n, m] : std::vector<std::pair<int, int>>{{6, 2}, {2, 4}, {4, 2}}) {
        INFO("G8 n=" << n << " m=" << m);
        auto g = construct_presented_th14("G8", {.n = n, .m = m});
        CHECK(g.group.order == 2 * m * n);
        std::string why;
        CHECK(group_axioms_ok(g.group, &why));
    }
    for (auto [n, m] : std::vector<std::pair<int, int>>{{4, 3}, {6, 2}, {2, 4}, {8, 3}}) {
        INFO("G9 n=" << n << " m=" << m);
        auto g = construct_presented_th14("G9", {.n = n, .m = m});
        CHECK(g.group.order == 2 * m * n);
        std::string why;
        CHECK(group_axioms_ok(g.group, &why));
    }
    // odd n rejects the r^(n/2) targets; odd m collapses the inverting cases
    CHECK_THROWS_AS(construct_presented_th14("G8", {.n = 3, .m = 2}), parameter_error);
    CHECK_THROWS_AS(construct_presented_th14("G5", {.n = 4, .m = 3}), parameter_error);
}

TEST_CASE("G5 with trivial parameters reduces to known groups") {
    // n = 1: <s, t | s^2 = 1, t^2 = 1, (st)^m = 1> = dihedral of order 2m
    auto g = construct_presented_th14("G5", {.n = 1, .m = 4});
    CHECK(g.group.order == 8);
    CHECK(is_isomorphic(g.group, dihedral_group(4)));
}

TEST_CASE("direct product cases") {
    auto a4 = construct_presented_th14("A4_x_Cn", {.n = 5});
    CHECK(a4.group.order == 60);
    auto s4 = construct_presented_th14("S4_x_Cn", {.n = 2});
    CHECK(s4.group.order == 48);
    CHECK(is_isomorphic(s4.group, direct_product(symmetric_group(4), cyclic_group(2))));
    auto u = construct_presented_th14("U_x_Cn", {.n = 5, .p = 3, .t = 2});
    CHECK(u.group.order == 45);
    auto psl = construct_presented_th14("PSL_x_Cn", {.n = 2, .q = 5});
    CHECK(psl.group.order == 120);
    auto sl23 = construct_presented_th14("SL23", {});
    CHECK(sl23.group.order == 24);
}

TEST_CASE("split actions through the abelianization") {
    // G10' with l of order 3 mod 7: C7 x| A4
    auto g = construct_presented_th14("G10p", {.n = 7, .l = 2});
    CHECK(g.group.order == 84);
    const auto& G = g.group;
    CHECK(G.pow(g.sigma, 2) == 0);
    CHECK(G.pow(g.tau, 3) == 0);
    CHECK(G.pow(G.op(g.sigma, g.tau), 3) == 0);
    CHECK(G.conj(g.sigma, g.r) == g.r);
    CHECK(G.conj(g.tau, g.r) == G.pow(g.r, 2));

    // G16: C5 x| S4 with l = -1
    auto g16 = construct_presented_th14("G16", {.n = 5, .l = 4});
    CHECK(g16.group.order == 120);
    const auto& H = g16.group;
    CHECK(H.pow(g16.sigma, 2) == 0);
    CHECK(H.pow(H.op(g16.sigma, g16.tau), 4) == 0);
    CHECK(H.conj(g16.sigma, g16.r) == H.pow(g16.r, 4));
    CHECK(H.conj(g16.tau, g16.r) == g16.r);
}

TEST_CASE("U_semi and K_m cases") {
    // C7 x| C3^1 with l = 2 (2^3 = 8 = 1 mod 7)
    auto u = construct_presented_th14("U_semi", {.n = 7, .l = 2, .p = 3, .t = 1});
    CHECK(u.group.order == 21);
    CHECK(is_isomorphic(u.group, semidirect_cyclic(7, 2, 3)));

    // K_m split: (C7 x C2) x| C3 with l = 2 on C7, k = 1 on C2
    auto km = construct_presented_th14("Km_semi", {.n = 7, .m = 2, .l = 2, .k = 1, .p = 3, .t = 1});
    CHECK(km.group.order == 42);

    auto kc = construct_presented_th14("Km_cyclic", {.n = 7, .m = 2, .l = 9, .p = 3, .t = 1});
    CHECK(kc.group.order == 42);
}

TEST_CASE("central extension cases through double covers") {
    // A5 central: sigma^2 = t^3 = (st)^5 = r^(n/2)
    auto a5 = construct_presented_th14("A5_central", {.n = 2});
    CHECK(a5.group.order == 120);
    CHECK(is_isomorphic(a5.group, matrix_group_2x2(5, true, "SL(2,5)")));
    const auto& G = a5.group;
    int half = G.pow(a5.r, 1);  // n = 2: r^(n/2) = r
    CHECK(G.pow(a5.sigma, 2) == half);
    CHECK(G.pow(a5.tau, 3) == half);
    CHECK(G.pow(G.op(a5.sigma, a5.tau), 5) == half);

    auto a5big = construct_presented_th14("A5_central", {.n = 4});
    CHECK(a5big.group.order == 240);

    // G18 / G22: S4 family, n = 2, l = 1
    auto g18 = construct_presented_th14("G18", {.n = 2, .l = 1});
    CHECK(g18.group.order == 48);
    {
        const auto& H = g18.group;
        CHECK(H.pow(g18.sigma, 2) == 0);
        CHECK(H.pow(g18.tau, 3) == 0);
        CHECK(H.pow(H.op(g18.sigma, g18.tau), 4) == H.pow(g18.r, 1));
    }
    auto g22 = construct_presented_th14("G22", {.n = 2, .l = 1});
    CHECK(g22.group.order == 48);
    {
        const auto& H = g22.group;
        CHECK(H.pow(g22.sigma, 2) == H.pow(g22.r, 1));
        CHECK(H.pow(H.op(g22.sigma, g22.tau), 4) == H.pow(g22.r, 1));
    }
    CHECK_FALSE(is_isomorphic(g18.group, g22.group));
}

TEST_CASE("enlarged-kernel cases") {
    // G12': n divisible by 3, t^3 = (st)^3 = r^(n/3)
    auto g12 = construct_presented_th14("G12p", {.n = 3, .l = 1});
    CHECK(g12.group.order == 36);
    {
        const auto& H = g12.group;
        CHECK(H.element_order[g12.r] == 3);
        CHECK(H.pow(g12.sigma, 2) == 0);
        CHECK(H.pow(g12.tau, 3) == H.pow(g12.r, 1));
        CHECK(H.pow(H.op(g12.sigma, g12.tau), 3) == H.pow(g12.r, 1));
    }

    // G13: n even, sigma^2 = r^(n/2), t acts by k with k^3 = 1 mod n
    auto g13 = construct_presented_th14("G13", {.n = 2, .k = 1});
    CHECK(g13.group.order == 24);
    {
        const auto& H = g13.group;
        CHECK(H.pow(g13.sigma, 2) == H.pow(g13.r, 1));
        CHECK(H.pow(g13.tau, 3) == 0);
        CHECK(H.pow(H.op(g13.sigma, g13.tau), 3) == 0);
    }
    // G13 with n = 2 is SL(2,3)
    CHECK(is_isomorphic(g13.group, matrix_group_2x2(3, true, "SL(2,3)")));
}

TEST_CASE("unknown case ids are rejected") {
    CHECK_THROWS_AS(construct_presented_th14("nonsense", {}), parameter_error);
}
