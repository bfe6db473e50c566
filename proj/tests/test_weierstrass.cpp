#include <catch2/catch_amalgamated.hpp>

#include "curveaut/weierstrass.hpp"

using namespace curveaut;

namespace {

/// Naive oracle: all g-subsets of [1, 2g-1] containing 1, semigroup check
/// by direct scan.
std::vector<std::vector<int>> oracle_sequences(int g) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur{1};
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == g) {
            if (is_valid_gap_sequence(g, cur)) out.push_back(cur);
            return;
        }
        for (int v = next; v <= 2 * g - 1; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(2);
    return out;
}

}  // namespace

TEST_CASE("gap sequence validity") {
    std::string why;
    CHECK(is_valid_gap_sequence(2, {1, 2}, &why));
    CHECK(is_valid_gap_sequence(2, {1, 3}, &why));
    CHECK_FALSE(is_valid_gap_sequence(3, {1, 2, 6}, &why));  // 6 > 2g-1
    CHECK_FALSE(is_valid_gap_sequence(3, {2, 3, 4}, &why));  // missing 1
    CHECK_FALSE(is_valid_gap_sequence(3, {1, 3, 4}, &why));  // 2+2=4 gap but 2 nongap... check
}

TEST_CASE("gap sequence enumeration for small genus") {
    auto g1 = enumerate_gap_sequences(1);
    REQUIRE(g1.size() == 1);
    CHECK(g1[0].gaps == std::vector<int>{1});

    auto g2 = enumerate_gap_sequences(2);
    REQUIRE(g2.size() == 2);
    CHECK(g2[0].gaps == std::vector<int>{1, 2});
    CHECK(g2[1].gaps == std::vector<int>{1, 3});

    auto g3 = enumerate_gap_sequences(3);
    REQUIRE(g3.size() == 4);
    CHECK(g3[0].gaps == std::vector<int>{1, 2, 3});
    CHECK(g3[1].gaps == std::vector<int>{1, 2, 4});
    CHECK(g3[2].gaps == std::vector<int>{1, 2, 5});
    CHECK(g3[3].gaps == std::vector<int>{1, 3, 5});
}

TEST_CASE("enumeration matches the subset oracle up to genus 8") {
    for (int g = 1; g <= 8; ++g) {
        auto fast = enumerate_gap_sequences(g);
        auto slow = oracle_sequences(g);
        INFO("genus " << g);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t i = 0; i < fast.size(); ++i) REQUIRE(fast[i].gaps == slow[i]);
    }
}

TEST_CASE("weights") {
    GapSequence classical{4, {1, 2, 3, 4}};
    CHECK(weight(classical) == 0);
    for (int g = 2; g <= 10; ++g) {
        std::vector<int> hyper;
        for (int i = 0; i < g; ++i) hyper.push_back(2 * i + 1);
        GapSequence h{g, hyper};
        CHECK(weight(h) == static_cast<long long>(g) * (g - 1) / 2);
    }
    GapSequence s{3, {1, 2, 5}};
    CHECK(weight(s) == 2);
}

TEST_CASE("maximal weight is attained only by the hyperelliptic sequence") {
    for (int g = 2; g <= 8; ++g) {
        long long maxw = static_cast<long long>(g) * (g - 1) / 2;
        for (const auto& seq : enumerate_gap_sequences(g)) {
            long long w = weight(seq);
            CHECK(w <= maxw);
            if (w == maxw) {
                std::vector<int> hyper;
                for (int i = 0; i < g; ++i) hyper.push_back(2 * i + 1);
                CHECK(seq.gaps == hyper);
            }
        }
    }
}

TEST_CASE("non-gap pairing holds on every enumerated sequence") {
    for (int g = 1; g <= 8; ++g)
        for (const auto& seq : enumerate_gap_sequences(g)) {
            INFO("genus " << g);
            CHECK(nongap_pairing_holds(seq));
        }
}

TEST_CASE("non-gap pairing examples") {
    GapSequence a{2, {1, 3}};
    CHECK(a.nongaps() == std::vector<int>{2, 4});
    CHECK(nongap_pairing_holds(a));
    GapSequence b{3, {1, 2, 5}};
    CHECK(b.nongaps() == std::vector<int>{3, 4, 6});
    CHECK(nongap_pairing_holds(b));
}

TEST_CASE("point count bounds") {
    auto b2 = weierstrass_point_count_bounds(2);
    CHECK(b2.lower == 6);
    CHECK(b2.upper == 6);
    auto b3 = weierstrass_point_count_bounds(3);
    CHECK(b3.lower == 8);
    CHECK(b3.upper == 24);
    CHECK_THROWS_AS(weierstrass_point_count_bounds(1), parameter_error);
    // total weight / max weight = hyperelliptic point count
    for (int g = 2; g <= 50; ++g) {
        long long gg = g;
        CHECK((gg * gg * gg - gg) % (gg * (gg - 1) / 2) == 0);
        CHECK((gg * gg * gg - gg) / (gg * (gg - 1) / 2) == 2 * gg + 2);
    }
}

TEST_CASE("normal form genus bound") {
    CHECK(wnf_genus_bound(2, 3) == 1);
    CHECK(wnf_genus_bound(3, 4) == 3);
    for (int g = 1; g <= 10; ++g) CHECK(wnf_genus_bound(2, 2 * g + 1) == g);
    CHECK_THROWS_AS(wnf_genus_bound(4, 6), parameter_error);
    CHECK_THROWS_AS(wnf_genus_bound(1, 5), parameter_error);
}

TEST_CASE("genus cap is a resource error") {
    CHECK_THROWS_AS(enumerate_gap_sequences(17), resource_error);
}
