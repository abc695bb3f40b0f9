#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "mdsum/markov.hpp"

using mdsum::integer;
using mdsum::triple;

namespace {

// Cube-scan oracle for small bounds, independent of both the Vieta tree
// and the quadratic-root scan.
std::set<triple> markov_cube_scan(long long bound) {
    std::set<triple> out;
    for (long long a = 1; a <= bound; ++a)
        for (long long b = a; b <= bound; ++b)
            for (long long c = b; c <= bound; ++c)
                if (a * a + b * b + c * c == 3 * a * b * c) out.insert(triple{a, b, c});
    return out;
}

}  // namespace

TEST_CASE("is_markov examples") {
    REQUIRE(mdsum::is_markov({1, 1, 1}));
    REQUIRE(mdsum::is_markov({1, 2, 5}));
    REQUIRE_FALSE(mdsum::is_markov({1, 2, 3}));
    REQUIRE_THROWS_AS(mdsum::is_markov({0, 1, 1}), std::domain_error);
}

TEST_CASE("markov_condition examples") {
    REQUIRE(mdsum::markov_condition({1, 1, 1}));
    REQUIRE(mdsum::markov_condition({1, 2, 5}));
    REQUIRE_FALSE(mdsum::markov_condition({1, 2, 3}));
}

TEST_CASE("(3,3,3): the coprimality hypothesis is essential") {
    // Satisfies the modular condition but not the equation; it is not
    // pairwise coprime, so equation/condition equivalence properties only
    // quantify over pairwise-coprime triples.
    REQUIRE(mdsum::markov_condition({3, 3, 3}));
    REQUIRE_FALSE(mdsum::is_markov({3, 3, 3}));
    REQUIRE_FALSE(mdsum::pairwise_coprime({3, 3, 3}));
}

TEST_CASE("pairwise_coprime examples") {
    REQUIRE(mdsum::pairwise_coprime({1, 1, 1}));
    REQUIRE(mdsum::pairwise_coprime({2, 5, 29}));
    REQUIRE_FALSE(mdsum::pairwise_coprime({3, 3, 3}));
    REQUIRE_FALSE(mdsum::pairwise_coprime({2, 4, 9}));
}

TEST_CASE("normalized sorts components") {
    REQUIRE(mdsum::normalized({5, 1, 2}) == triple{1, 2, 5});
    REQUIRE(mdsum::normalized({2, 1, 1}) == triple{1, 1, 2});
    REQUIRE(mdsum::normalized({1, 2, 5}) == triple{1, 2, 5});
}

TEST_CASE("vieta_neighbors examples") {
    auto n111 = mdsum::vieta_neighbors({1, 1, 1});
    REQUIRE(n111[0] == triple{1, 1, 2});
    REQUIRE(n111[1] == triple{1, 1, 2});
    REQUIRE(n111[2] == triple{1, 1, 2});

    auto n125 = mdsum::vieta_neighbors({1, 2, 5});
    REQUIRE(n125[0] == triple{2, 5, 29});
    REQUIRE(n125[1] == triple{1, 5, 13});
    REQUIRE(n125[2] == triple{1, 1, 2});

    auto n112 = mdsum::vieta_neighbors({1, 1, 2});
    REQUIRE(n112[0] == triple{1, 2, 5});
    REQUIRE(n112[1] == triple{1, 2, 5});
    REQUIRE(n112[2] == triple{1, 1, 1});

    REQUIRE_THROWS_AS(mdsum::vieta_neighbors({1, 2, 3}), mdsum::not_markov_error);
}

TEST_CASE("vieta closure and pairwise coprimality on the tree") {
    for (const triple& t : mdsum::enumerate_markov(1000)) {
        REQUIRE(mdsum::is_markov(t));
        REQUIRE(mdsum::pairwise_coprime(t));
        for (const triple& n : mdsum::vieta_neighbors(t)) REQUIRE(mdsum::is_markov(n));
    }
}

TEST_CASE("enumerate_markov examples") {
    REQUIRE(mdsum::enumerate_markov(1) == std::set<triple>{{1, 1, 1}});
    REQUIRE(mdsum::enumerate_markov(5) ==
            std::set<triple>{{1, 1, 1}, {1, 1, 2}, {1, 2, 5}});
    REQUIRE(mdsum::enumerate_markov(30) ==
            std::set<triple>{{1, 1, 1}, {1, 1, 2}, {1, 2, 5}, {1, 5, 13}, {2, 5, 29}});
    REQUIRE_THROWS_AS(mdsum::enumerate_markov(0), std::domain_error);
}

TEST_CASE("enumerate_markov matches the cube scan") {
    REQUIRE(mdsum::enumerate_markov(40) == markov_cube_scan(40));
}

TEST_CASE("enumerate_markov_oracle examples") {
    REQUIRE(mdsum::enumerate_markov_oracle(1) == std::set<triple>{{1, 1, 1}});
    REQUIRE(mdsum::enumerate_markov_oracle(2) == std::set<triple>{{1, 1, 1}, {1, 1, 2}});
    REQUIRE(mdsum::enumerate_markov_oracle(5) ==
            std::set<triple>{{1, 1, 1}, {1, 1, 2}, {1, 2, 5}});
}

TEST_CASE("tree and oracle agree up to 2000") {
    for (long long bound : {1, 2, 5, 13, 100, 433, 2000})
        REQUIRE(mdsum::enumerate_markov(bound) == mdsum::enumerate_markov_oracle(bound));
}

TEST_CASE("verify_equivalence small bounds") {
    auto rep1 = mdsum::verify_equivalence(1);
    REQUIRE(rep1.passed());
    REQUIRE(rep1.eq1_set == std::set<triple>{{1, 1, 1}});

    auto rep5 = mdsum::verify_equivalence(5);
    REQUIRE(rep5.passed());
    std::set<triple> expect{{1, 1, 1}, {1, 1, 2}, {1, 2, 5}};
    REQUIRE(rep5.eq1_set == expect);
    REQUIRE(rep5.cond2_set == expect);
    REQUIRE(rep5.dzero_set == expect);
    REQUIRE(rep5.counterexamples.empty());
}

TEST_CASE("verify_equivalence is deterministic for a fixed seed") {
    auto r1 = mdsum::verify_equivalence(40, 50, 0xC0FFEE);
    auto r2 = mdsum::verify_equivalence(40, 50, 0xC0FFEE);
    REQUIRE(r1.scanned == r2.scanned);
    REQUIRE(r1.evaluated == r2.evaluated);
    REQUIRE(r1.dzero_set == r2.dzero_set);
    REQUIRE(r1.eq1_set == r2.eq1_set);
    REQUIRE(r1.passed());
    // the sample is part of the evaluated count: interesting + min(sample, rest)
    REQUIRE(r1.evaluated >= 50);
}

TEST_CASE("verify_equivalence respects the sample size") {
    auto rep = mdsum::verify_equivalence(30, 7, 1);
    REQUIRE(rep.passed());
    // 4 interesting triples at bound 30, plus exactly 7 sampled others
    REQUIRE(rep.evaluated == rep.eq1_set.size() + 7);
}

TEST_CASE("verify_equivalence rejects absurd bounds") {
    REQUIRE_THROWS_AS(mdsum::verify_equivalence(0), std::domain_error);
    REQUIRE_THROWS_AS(mdsum::verify_equivalence(integer("10000000000")), mdsum::bound_error);
}
