#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "curveaut/riemann_hurwitz.hpp"
#include "curveaut/signature.hpp"

using namespace curveaut;

namespace {

/// Independent oracle: loop over orbit genus and tuple length, enumerate
/// nondecreasing period tuples with early cutoff on the branch sum.
std::vector<Signature> oracle_enumerate(int genus, long long order,
                                        const std::set<int>& allowed) {
    std::vector<int> ms(allowed.begin(), allowed.end());
    std::vector<Signature> out;
    for (int g0 = 0; g0 <= genus + 1; ++g0) {
        long long max_r = 2 * (genus + 1) * order;
        std::vector<int> cur;
        std::function<void(std::size_t)> rec = [&](std::size_t lo) {
            Signature s(g0, cur);
            Rat g = rh_genus(s, order);
            if (g == Rat(genus)) out.push_back(s.canonical());
            if (g > Rat(genus)) return;  // adding periods only increases genus
            if (static_cast<long long>(cur.size()) >= max_r) return;
            for (std::size_t i = lo; i < ms.size(); ++i) {
                cur.push_back(ms[i]);
                rec(i);
                cur.pop_back();
            }
        };
        rec(0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("rh_genus on the worked examples") {
    CHECK(rh_genus(parse_signature("0;2,3,7"), 168) == Rat(3));
    CHECK(rh_genus(parse_signature("1;2,2"), 2) == Rat(2));
    CHECK(rh_genus(parse_signature("0;5,5,5"), 5) == Rat(2));
    CHECK(rh_genus(parse_signature("0;2,2,2,2,2,2"), 2) == Rat(2));
}

TEST_CASE("signature text syntax round trips") {
    CHECK(parse_signature("0;5,5,5").str() == "0;5,5,5");
    CHECK(parse_signature("2;-").str() == "2;-");
    CHECK(parse_signature("1;2,2").r() == 2);
    CHECK_THROWS_AS(parse_signature("no-semicolon"), data_error);
    CHECK_THROWS_AS(parse_signature("0;1,2"), data_error);
    CHECK_THROWS_AS(parse_signature("0;2,x"), data_error);
}

TEST_CASE("genus 2 order 2 signatures are exactly the two from the example") {
    auto sigs = enumerate_signatures(2, 2, {2});
    REQUIRE(sigs.size() == 2);
    CHECK(sigs[0].str() == "0;2,2,2,2,2,2");
    CHECK(sigs[1].str() == "1;2,2");
}

TEST_CASE("genus 2 order 5 gives only (0;5,5,5)") {
    auto sigs = enumerate_signatures(2, 5, {5});
    REQUIRE(sigs.size() == 1);
    CHECK(sigs[0].str() == "0;5,5,5");
}

TEST_CASE("no signature survives when the order is incompatible") {
    CHECK(enumerate_signatures(2, 49, {7, 49}).empty());
}

TEST_CASE("enumerate_signatures matches the oracle for g <= 4, order <= 48") {
    for (int genus = 2; genus <= 4; ++genus) {
        for (long long order : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 20, 24, 30, 36, 48}) {
            // periods: all divisors >= 2 of the order (superset of any element spectrum)
            std::set<int> allowed;
            for (int d = 2; d <= order; ++d)
                if (order % d == 0) allowed.insert(d);
            if (allowed.empty()) continue;
            auto fast = enumerate_signatures(genus, order, allowed);
            auto slow = oracle_enumerate(genus, order, allowed);
            INFO("genus " << genus << ", order " << order);
            REQUIRE(fast.size() == slow.size());
            for (std::size_t i = 0; i < fast.size(); ++i) REQUIRE(fast[i] == slow[i]);
        }
    }
}

TEST_CASE("rh_genus is monotone in periods and period count") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> g0d(0, 3), rd(0, 5), md(2, 12), nd(2, 60);
    for (int trial = 0; trial < 200; ++trial) {
        int g0 = g0d(rng), r = rd(rng);
        long long n = nd(rng);
        std::vector<int> ms;
        for (int i = 0; i < r; ++i) ms.push_back(md(rng));
        Signature s(g0, ms);
        Rat base = rh_genus(s, n);
        // adding a period never decreases the genus
        std::vector<int> ms2 = ms;
        ms2.push_back(md(rng));
        CHECK(rh_genus(Signature(g0, ms2), n) >= base);
        // raising a period never decreases the genus
        if (!ms.empty()) {
            std::vector<int> ms3 = ms;
            ms3[0] += 1;
            CHECK(rh_genus(Signature(g0, ms3), n) >= base);
        }
    }
}

TEST_CASE("cover_genus on tame data matches worked values") {
    // hyperelliptic: degree 2, base genus 0, 2g+2 tame double points
    CoverData hyper;
    hyper.degree = 2;
    hyper.base_genus = 0;
    hyper.ramified_places.push_back({2, 1, 1, 8, std::nullopt});
    CHECK(cover_genus(hyper) == Rat(3));

    // identity cover
    CoverData id;
    id.degree = 1;
    id.base_genus = 4;
    CHECK(cover_genus(id) == Rat(4));
}

TEST_CASE("cover_genus with explicit Artin-Schreier different exponents") {
    // char 2 type (7): one wild place with polar order 7, different exponent 8
    CoverData c;
    c.degree = 2;
    c.base_genus = 0;
    c.ramified_places.push_back({2, 2, 1, 1, 8});
    CHECK(cover_genus(c) == Rat(3));

    // the default wild rule: e = q = 2 gives beta = 2 (polar order 1)
    CoverData d;
    d.degree = 2;
    d.base_genus = 0;
    d.ramified_places.push_back({2, 2, 1, 4, std::nullopt});
    // 2(g-1) = 2(-1)(2) + 2 * (2/2) * 4 = 4 => g = 3
    CHECK(cover_genus(d) == Rat(3));
}

TEST_CASE("cover_genus rejects invalid wild data") {
    CoverData c;
    c.degree = 6;
    c.base_genus = 0;
    c.ramified_places.push_back({6, 2, 1, 1, std::nullopt});  // e* = 3 does not divide q-1 = 1
    CHECK_THROWS_AS(cover_genus(c), parameter_error);
}

TEST_CASE("cover_genus on all-tame Galois data equals rh_genus of the signature") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> nd(2, 24), rd(1, 5);
    int done = 0;
    while (done < 100) {
        long long n = nd(rng);
        int r = rd(rng);
        std::vector<int> divisors;
        for (int d = 2; d <= n; ++d)
            if (n % d == 0) divisors.push_back(d);
        if (divisors.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, divisors.size() - 1);
        std::vector<int> ms;
        CoverData c;
        c.degree = n;
        c.base_genus = std::uniform_int_distribution<int>(0, 2)(rng);
        for (int i = 0; i < r; ++i) {
            int m = divisors[pick(rng)];
            ms.push_back(m);
            // one base place of degree 1 per branch point; the degree factor
            // in the formula accounts for the fiber upstairs
            c.ramified_places.push_back({m, 1, 1, 1, std::nullopt});
        }
        Signature s(c.base_genus, ms);
        CHECK(cover_genus(c) == rh_genus(s, n));
        ++done;
    }
}

TEST_CASE("classical bounds") {
    CHECK(hurwitz_bound(3) == 168);
    CHECK(wiman_bound(2) == 10);
    CHECK(poschar_bound(2) == 256);
    CHECK(large_group_threshold(2) == 4);
    CHECK(poschar_element_order_bound(2, 3) == 2 * 3 * 3 * 25);
    CHECK_THROWS_AS(hurwitz_bound(1), parameter_error);
    CHECK_THROWS_AS(wiman_bound(0), parameter_error);
}

TEST_CASE("exceptional families at small genus") {
    auto fams = exceptional_families(10);
    // Henn-i with k = 2: genus 2, |G| = 2^5 * 5 = 160
    bool henn_i = false, hermitian_q3 = false, stich_31 = false;
    for (const auto& f : fams) {
        if (f.name == "Henn-i" && f.params == std::vector<long long>{2}) {
            henn_i = true;
            CHECK(f.genus == 2);
            CHECK(f.group_order == 160);
        }
        if (f.name == "Henn-iii" && f.params == std::vector<long long>{3}) {
            hermitian_q3 = true;
            CHECK(f.genus == 3);
        }
        if (f.name == "Stichtenoth" && f.params == std::vector<long long>{3, 1}) {
            stich_31 = true;
            CHECK(f.genus == 3);
            CHECK(f.group_order == 6048);
        }
    }
    CHECK(henn_i);
    CHECK(hermitian_q3);
    CHECK(stich_31);
}

TEST_CASE("exceptional families satisfy the theorem thresholds") {
    for (const auto& f : exceptional_families(40)) {
        INFO(f.name << " genus " << f.genus);
        if (f.name.rfind("Henn", 0) == 0)
            CHECK(f.group_order >= 8 * f.genus * f.genus * f.genus);
        if (f.name == "Stichtenoth")
            CHECK(f.group_order >= 16 * f.genus * f.genus * f.genus * f.genus);
        CHECK(f.genus >= 2);
    }
}
