#include <catch2/catch_amalgamated.hpp>

#include "curveaut/action_search.hpp"
#include "curveaut/catalog.hpp"
#include "curveaut/classify.hpp"
#include "curveaut/constructors.hpp"

using namespace curveaut;

TEST_CASE("C5 with (0;5,5,5): witness of shape (x, x, x^3)") {
    auto c5 = cyclic_group(5);
    auto out = find_generating_vector(c5, parse_signature("0;5,5,5"));
    REQUIRE(out.found());
    std::string why;
    CHECK(generating_vector_valid(c5, *out.witness, &why));
    // the specific classic witness is valid too
    GeneratingVector v;
    v.signature = parse_signature("0;5,5,5");
    v.elliptic_part = {1, 1, c5.pow(1, 3)};
    CHECK(generating_vector_valid(c5, v, &why));
}

TEST_CASE("C2 with (1;2,2): witness (x,x,x,x)") {
    auto c2 = cyclic_group(2);
    GeneratingVector v;
    v.signature = parse_signature("1;2,2");
    v.hyperbolic_part = {1, 1};
    v.elliptic_part = {1, 1};
    std::string why;
    INFO(why);
    CHECK(generating_vector_valid(c2, v, &why));
    CHECK(find_generating_vector(c2, parse_signature("1;2,2")).found());
}

TEST_CASE("non-hyperbolic signatures have no witness") {
    auto c3 = cyclic_group(3);
    auto out = find_generating_vector(c3, parse_signature("0;3,3"));
    CHECK(out.exhausted);
    CHECK_FALSE(out.found());
}

TEST_CASE("missing element orders reject the signature immediately") {
    auto c4 = cyclic_group(4);
    CHECK_FALSE(find_generating_vector(c4, parse_signature("0;3,3,3,3")).found());
}

TEST_CASE("torsion-free hom counts from the worked examples") {
    CHECK(count_torsion_free_homs(cyclic_group(5), parse_signature("0;5,5,5")) == 12);
    CHECK(count_torsion_free_homs(cyclic_group(10), parse_signature("0;2,5,10")) == 4);
    CHECK(count_torsion_free_homs(cyclic_group(2), parse_signature("0;2,2,2")) == 0);
    CHECK(count_torsion_free_homs(cyclic_group(2), parse_signature("0;2,2,2,2,2,2")) == 1);
}

TEST_CASE("character-formula counts match brute force on the examples") {
    auto c5 = cyclic_group(5);
    auto t5 = abelian_character_table(c5);
    CHECK(count_torsion_free_homs_character(c5, t5, parse_signature("0;5,5,5")) == 12);

    auto c10 = cyclic_group(10);
    auto t10 = abelian_character_table(c10);
    CHECK(count_torsion_free_homs_character(c10, t10, parse_signature("0;2,5,10")) == 4);

    auto v4 = abelian_group({2, 2});
    auto tv = abelian_character_table(v4);
    long long brute = count_torsion_free_homs(v4, parse_signature("0;2,2,2"));
    CHECK(count_torsion_free_homs_character(v4, tv, parse_signature("0;2,2,2")) == brute);
}

TEST_CASE("character formula equals brute force for all abelian groups up to order 16") {
    // triangle signatures with periods dividing the exponent
    std::vector<FiniteGroup> groups;
    for (int n = 2; n <= 16; ++n) {
        // all abelian groups of order n via partitions into cyclic factors:
        // enumerate multiplicative partitions crudely through divisor chains
        std::function<void(int, int, std::vector<int>&)> rec = [&](int rem, int maxd,
                                                                   std::vector<int>& acc) {
            if (rem == 1) {
                groups.push_back(abelian_group(acc));
                return;
            }
            for (int d = 2; d <= std::min(rem, maxd); ++d)
                if (rem % d == 0) {
                    acc.push_back(d);
                    rec(rem / d, d, acc);
                    acc.pop_back();
                }
        };
        std::vector<int> acc;
        rec(n, n, acc);
    }
    int checked = 0;
    for (const auto& g : groups) {
        auto table = abelian_character_table(g);
        int N = g.exponent();
        std::vector<int> divs;
        for (int d = 2; d <= N; ++d)
            if (N % d == 0) divs.push_back(d);
        for (std::size_t i = 0; i < divs.size(); ++i)
            for (std::size_t j = i; j < divs.size(); ++j)
                for (std::size_t k = j; k < divs.size(); ++k) {
                    Signature sig(0, {divs[i], divs[j], divs[k]});
                    INFO(g.label << " with " << sig.str());
                    REQUIRE(count_torsion_free_homs_character(g, table, sig) ==
                            count_torsion_free_homs(g, sig));
                    ++checked;
                }
    }
    CHECK(checked > 50);
}

TEST_CASE("epimorphism class counts from the worked examples") {
    auto e5 = count_epimorphism_classes(cyclic_group(5), parse_signature("0;5,5,5"));
    CHECK(e5.homs == 12);
    CHECK(e5.epimorphisms == 12);
    CHECK(e5.classes == 3);

    auto e10 = count_epimorphism_classes(cyclic_group(10), parse_signature("0;2,5,10"));
    CHECK(e10.homs == 4);
    CHECK(e10.epimorphisms == 4);
    CHECK(e10.classes == 1);

    auto e2 = count_epimorphism_classes(cyclic_group(2), parse_signature("0;2,2,2,2,2,2"));
    CHECK(e2.classes == 1);
}

TEST_CASE("|Epi| = |Aut| * classes exactly on a small sample") {
    struct Case {
        FiniteGroup g;
        const char* sig;
    };
    std::vector<Case> cases;
    cases.push_back({dihedral_group(3, "S3"), "0;2,2,3"});
    cases.push_back({abelian_group({2, 2}), "0;2,2,2"});
    cases.push_back({cyclic_group(8), "0;2,8,8"});
    cases.push_back({dicyclic_group(2, "Q8"), "0;4,4,4"});
    for (auto& c : cases) {
        auto sig = parse_signature(c.sig);
        auto cnt = count_epimorphism_classes(c.g, sig);
        INFO(c.g.label << " " << c.sig);
        CHECK(cnt.epimorphisms == automorphism_group_order(c.g) * cnt.classes);
    }
}

TEST_CASE("classify genus 2 at order 2 gives exactly the two records") {
    auto cat = builtin_catalog();
    ClassifyOptions opt;
    opt.orders_filter = {2};
    auto recs = classify(2, cat, opt);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].group_label == "C2");
    CHECK(recs[1].group_label == "C2");
    std::set<std::string> sigs{recs[0].signature.canonical().str(),
                               recs[1].signature.canonical().str()};
    CHECK(sigs == std::set<std::string>{"0;2,2,2,2,2,2", "1;2,2"});
    CHECK(recs[0].catalog_complete_at_order);
}

TEST_CASE("classify genus 2 at order 5 gives exactly C5 with (0;5,5,5)") {
    auto cat = builtin_catalog();
    ClassifyOptions opt;
    opt.orders_filter = {5};
    auto recs = classify(2, cat, opt);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].group_label == "C5");
    CHECK(recs[0].signature.canonical().str() == "0;5,5,5");
    CHECK(recs[0].hom_count.value() == 12);
    CHECK(recs[0].epi_class_count.value() == 3);
}

TEST_CASE("every classify record re-validates") {
    auto cat = builtin_catalog();
    ClassifyOptions opt;
    opt.max_order = 12;
    auto recs = classify(2, cat, opt);
    CHECK(!recs.empty());
    for (const auto& rec : recs) {
        const auto* entry = cat.find_by_label(rec.group_label);
        REQUIRE(entry != nullptr);
        std::string why;
        INFO(rec.group_label << " " << rec.signature.str() << ": " << why);
        CHECK(generating_vector_valid(entry->group, rec.witness, &why));
        CHECK(rh_genus(rec.signature, rec.order) == Rat(2));
        // soundness: the signature passes enumerate_signatures
        std::set<int> periods;
        for (int o : entry->group.order_spectrum())
            if (o >= 2) periods.insert(o);
        auto sigs = enumerate_signatures(2, rec.order, periods);
        CHECK(std::find(sigs.begin(), sigs.end(), rec.signature.canonical()) != sigs.end());
    }
}

TEST_CASE("classify output is identical across worker counts") {
    auto cat = builtin_catalog();
    ClassifyOptions a, b;
    a.max_order = 10;
    b.max_order = 10;
    a.workers = 1;
    b.workers = 4;
    auto ra = classify(2, cat, a);
    auto rb = classify(2, cat, b);
    REQUIRE(ra.size() == rb.size());
    for (std::size_t i = 0; i < ra.size(); ++i) {
        CHECK(ra[i].group_label == rb[i].group_label);
        CHECK(ra[i].signature == rb[i].signature);
        CHECK(ra[i].witness.elliptic_part == rb[i].witness.elliptic_part);
    }
}

TEST_CASE("Klein quartic: PSL(2,7) acts with (0;2,3,7) in genus 3") {
    auto cat = builtin_catalog();
    const auto* psl = cat.find_by_label("PSL(2,7)");
    REQUIRE(psl != nullptr);
    auto out = find_generating_vector(psl->group, parse_signature("0;2,3,7"));
    REQUIRE(out.found());
    std::string why;
    CHECK(generating_vector_valid(psl->group, *out.witness, &why));
    CHECK(rh_genus(parse_signature("0;2,3,7"), 168) == Rat(3));
}

TEST_CASE("braid moves preserve validity") {
    auto c5 = cyclic_group(5);
    GeneratingVector v;
    v.signature = parse_signature("0;5,5,5");
    v.elliptic_part = {1, 1, 3};
    std::string why;
    REQUIRE(generating_vector_valid(c5, v, &why));
    auto orbit = braid_orbit(c5, v);
    CHECK(orbit.size() >= 2);
    for (const auto& w : orbit) CHECK(generating_vector_valid(c5, w, &why));

    auto s3 = dihedral_group(3, "S3");
    GeneratingVector u;
    u.signature = parse_signature("0;2,2,3,3");
    auto found = enumerate_generating_vectors(s3, u.signature);
    // (0;2,2,3,3) on S3: rh genus = 6*(-1) + 3*(1/2+1/2+2/3+2/3) + 1 = 2
    REQUIRE(!found.empty());
    for (const auto& w : braid_orbit(s3, found.front()))
        CHECK(generating_vector_valid(s3, w, &why));
}
