#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <memory>
#include <vector>

#include "hatg/book.hpp"
#include "hatg/errors.hpp"
#include "hatg/game.hpp"
#include "hatg/graph.hpp"

using namespace hatg;
using namespace hatg::book;

TEST_CASE("[book] the classic parameterization") {
    const BookParameters p3 = lemma_parameters(3);
    CHECK(p3.d == 3);
    CHECK(p3.q == 3);
    CHECK(p3.m == 729);
    CHECK(p3.s == 27);

    const BookParameters p4 = lemma_parameters(4);
    CHECK(p4.q == 16);
    CHECK(p4.m == 16384);
    CHECK(p4.s == 256);

    const BookParameters p2 = lemma_parameters(2);
    CHECK(p2.q == 1);
    CHECK(p2.m == 32);
    CHECK(p2.s == 4);

    CHECK_THROWS_AS(lemma_parameters(1), InvalidInputError);
    CHECK_THROWS_AS(lemma_parameters(20), InvalidInputError); // overflows m
}

TEST_CASE("[book] the union-bound chain closes strictly below one half") {
    const UnionBoundChain chain = union_bound_chain(3);
    CHECK(chain.holds);
    CHECK(chain.value <= chain.middle);
    CHECK(chain.middle <= chain.loose);
    CHECK(chain.loose < 0.5L);
    // at the classic point the two exponential bounds coincide
    CHECK(chain.middle == doctest::Approx(static_cast<double>(chain.loose)));
    // 3 * (2/3)^27, recomputed directly
    CHECK(static_cast<double>(chain.value) ==
          doctest::Approx(3.0 * std::pow(2.0 / 3.0, 27)).epsilon(1e-12));

    CHECK(union_bound_chain(4).holds);
    CHECK_THROWS_AS(union_bound_chain(1), InvalidInputError);
}

TEST_CASE("[book] exact onto verification accepts a balanced member") {
    OntoFamily family;
    family.params = BookParameters{2, 2, 1, 3};
    family.members = {{1, 0, 0, 1}};
    const OntoCheck check = verify_onto_family(family);
    CHECK(check.exact);
    CHECK(check.ok);
    CHECK(check.subsets_checked == 4); // C(4,3)
    CHECK(family.verified == OntoFamily::Verified::exact);
}

TEST_CASE("[book] exact onto verification pins down violations") {
    OntoFamily family;
    family.params = BookParameters{2, 2, 1, 3};
    family.members = {{0, 0, 0, 1}};
    const OntoCheck check = verify_onto_family(family);
    CHECK(check.exact);
    CHECK_FALSE(check.ok);
    CHECK(family.verified == OntoFamily::Verified::none);
    REQUIRE(check.violating_subset.has_value());
    CHECK(*check.violating_subset == std::vector<std::uint64_t>{0, 1, 2});
}

TEST_CASE("[book] sampled onto verification stays consistent") {
    OntoFamily family;
    family.params = BookParameters{2, 2, 1, 3};
    family.members = {{1, 0, 0, 1}};
    const OntoCheck check = verify_onto_family_sampled(family, 200, 9);
    CHECK_FALSE(check.exact);
    CHECK(check.ok);
    CHECK(check.subsets_checked == 200);
    CHECK(family.verified == OntoFamily::Verified::none); // sampling never stamps
}

TEST_CASE("[book] family construction verifies exactly at desk scale") {
    const OntoFamily family = build_onto_family(BookParameters{2, 2, 1, 3}, 3);
    CHECK(family.verified == OntoFamily::Verified::exact);
    REQUIRE(family.members.size() == 1);
    // every 3-subset onto means exactly two cells of each color
    int ones = 0;
    for (const int c : family.members[0]) ones += c;
    CHECK(ones == 2);
}

TEST_CASE("[book] impossible parameters exhaust their retries") {
    // s=2 would need a member injective on every input pair: impossible on
    // 4 inputs with 2 colors
    BuildOptions options;
    options.retries = 2;
    CHECK_THROWS_AS(build_onto_family(BookParameters{2, 2, 1, 2}, 3, options), SearchError);
}

TEST_CASE("[book] constructed strategies win the book game") {
    for (const int m : {1, 4}) {
        const OntoFamily family =
            build_onto_family(BookParameters{2, 2, static_cast<std::uint64_t>(m), 3}, 5);
        const StrategyProfile profile = construct_book_strategy(family);
        CHECK(profile.vertex_count() == 2 + m);
        const Graph graph = Graph::book(2, m);
        const VerifyOutcome outcome = verify_exhaustive(graph, profile);
        CHECK(outcome.winning());
        CHECK(outcome.checked == (m == 1 ? 8 : 64));
    }
}

TEST_CASE("[book] construction refuses unverified or mismatched families") {
    OntoFamily family = build_onto_family(BookParameters{2, 2, 1, 3}, 5);
    OntoFamily cleared = family;
    cleared.verified = OntoFamily::Verified::none;
    CHECK_THROWS_AS(construct_book_strategy(cleared), InvalidInputError);

    OntoFamily mismatched = family;
    mismatched.members.push_back(mismatched.members[0]);
    CHECK_THROWS_AS(construct_book_strategy(mismatched), InvalidInputError);
}

TEST_CASE("[book] central guessers replay their cached survivor strategies") {
    const OntoFamily family = build_onto_family(BookParameters{2, 3, 8, 6}, 19);
    auto members = std::make_shared<const std::vector<std::vector<int>>>(family.members);
    const StructuredGuesser g = make_book_central_guesser(0, family.params, members);
    // other central color followed by the eight outer hats
    const std::vector<int> obs{1, 0, 1, 2, 0, 1, 2, 0, 1};
    const int first = g.fn(obs);
    CHECK(g.fn(obs) == first);
    CHECK(first >= -1);
    CHECK(first < 3);
}

TEST_CASE("[book] verification budgets are explicit") {
    OntoFamily family;
    family.params = BookParameters{3, 4, 2, 33};
    family.members = {std::vector<int>(64, 0), std::vector<int>(64, 1)};
    CHECK_THROWS_AS(verify_onto_family(family, 1000), BudgetError);
}

TEST_CASE("[book] certification anchors") {
    // d=1: two points force distinct colors, three never fit two points
    const CertifiedQ one = certified_q(1, 8, 41);
    CHECK(one.q == 2);
    CHECK(one.end_to_end_verified);
    CHECK(one.family.verified == OntoFamily::Verified::exact);

    // d=2 with a single outer vertex cannot reach q=3
    CHECK(certified_q(2, 1, 42).q == 2);

    // d=2 with eight outer vertices certifies q=3
    const CertifiedQ two = certified_q(2, 8, 43);
    CHECK(two.q == 3);
    CHECK(two.params.s == 6); // min(q^d, capacity(2)+1)
    CHECK(two.family.verified == OntoFamily::Verified::exact);

    // d=3 stops at q=3: the q=4 check space no longer fits the exact budget
    CHECK(certified_q(3, 729, 44).q == 3);

    // no outer vertices, nothing to certify
    CHECK(certified_q(1, 0, 45).q == 1);
}
