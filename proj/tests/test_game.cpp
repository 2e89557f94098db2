#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "hatg/errors.hpp"
#include "hatg/game.hpp"
#include "hatg/rng.hpp"

using namespace hatg;

namespace {

// v0 mirrors its neighbor, v1 plays the complement: one of them is always
// right, the classic two-player certificate.
StrategyProfile winning_k2() {
    return StrategyProfile(2, {Guesser{TableGuesser{{0, 1}}}, Guesser{TableGuesser{{1, 0}}}});
}

StrategyProfile random_table_profile(const Graph& graph, int q, Prng& rng) {
    std::vector<Guesser> guessers;
    for (int v = 0; v < graph.vertex_count(); ++v) {
        std::uint64_t cells = 1;
        for (int i = 0; i < graph.degree(v); ++i) cells *= static_cast<std::uint64_t>(q);
        std::vector<int> table(cells);
        for (auto& t : table) t = rng.color(q);
        guessers.emplace_back(TableGuesser{std::move(table)});
    }
    return StrategyProfile(q, std::move(guessers));
}

} // namespace

TEST_CASE("[game] evaluate lists exactly the correct vertices") {
    const Graph k2 = Graph::complete(2);
    const StrategyProfile profile = winning_k2();

    CHECK(evaluate(k2, profile, Coloring(2, {0, 0})) == std::vector<int>{0});
    CHECK(evaluate(k2, profile, Coloring(2, {1, 1})) == std::vector<int>{0});
    CHECK(evaluate(k2, profile, Coloring(2, {0, 1})) == std::vector<int>{1});
    CHECK(evaluate(k2, profile, Coloring(2, {1, 0})) == std::vector<int>{1});
}

TEST_CASE("[game] any_correct agrees with evaluate on random profiles") {
    Prng rng(2024);
    const Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    for (int trial = 0; trial < 20; ++trial) {
        const int q = 2 + rng.color(2);
        const StrategyProfile profile = random_table_profile(g, q, rng);
        Evaluator ev(g, profile);
        std::vector<int> values(4, 0);
        for (int c = 0; c < q * q * q * q; ++c) {
            int rest = c;
            for (auto& v : values) {
                v = rest % q;
                rest /= q;
            }
            CHECK(ev.any_correct(values) == !ev.correct_vertices(values).empty());
        }
    }
}

TEST_CASE("[game] exhaustive verification accepts the winning pair") {
    const Graph k2 = Graph::complete(2);
    const VerifyOutcome outcome = verify_exhaustive(k2, winning_k2());
    CHECK(outcome.winning());
    CHECK(outcome.kind == VerifyOutcome::Kind::winning);
    CHECK_FALSE(outcome.counterexample.has_value());
    CHECK(outcome.checked == 4);
}

TEST_CASE("[game] exhaustive verification reports the first counterexample") {
    const Graph k2 = Graph::complete(2);
    // both vertices fixate on color 1: the all-zero coloring defeats them
    StrategyProfile bad(2, {Guesser{TableGuesser{{1, 1}}}, Guesser{TableGuesser{{1, 1}}}});
    const VerifyOutcome outcome = verify_exhaustive(k2, bad);
    CHECK(outcome.kind == VerifyOutcome::Kind::counterexample);
    REQUIRE(outcome.counterexample.has_value());
    CHECK(outcome.counterexample->values == std::vector<int>{0, 0});
    CHECK(outcome.checked == 1);
}

TEST_CASE("[game] counterexamples are least in lexicographic order") {
    const Graph k2 = Graph::complete(2);
    // v0 guesses its neighbor's color, v1 abstains: first all-wrong is (0,1)
    StrategyProfile p(2, {Guesser{TableGuesser{{0, 1}}},
                          Guesser{TableGuesser{{kAbstain, kAbstain}}}});
    const VerifyOutcome outcome = verify_exhaustive(k2, p);
    REQUIRE(outcome.counterexample.has_value());
    CHECK(outcome.counterexample->values == std::vector<int>{0, 1});
    CHECK(outcome.checked == 2);
}

TEST_CASE("[game] sampled verification never claims winning") {
    const Graph k2 = Graph::complete(2);
    const VerifyOutcome clean = verify_sampled(k2, winning_k2(), 500, 11);
    CHECK(clean.kind == VerifyOutcome::Kind::none_found);
    CHECK_FALSE(clean.winning());
    CHECK(clean.checked == 500);

    StrategyProfile bad(2, {Guesser{TableGuesser{{1, 1}}}, Guesser{TableGuesser{{1, 1}}}});
    const VerifyOutcome broken = verify_sampled(k2, bad, 500, 11);
    CHECK(broken.kind == VerifyOutcome::Kind::counterexample);
    REQUIRE(broken.counterexample.has_value());
    CHECK_FALSE(any_correct(k2, bad, *broken.counterexample));
}

TEST_CASE("[game] sampled verification is reproducible per seed") {
    const Graph g = Graph::complete(3);
    Prng rng(5);
    const StrategyProfile profile = random_table_profile(g, 3, rng);
    const VerifyOutcome a = verify_sampled(g, profile, 200, 77);
    const VerifyOutcome b = verify_sampled(g, profile, 200, 77);
    CHECK(a.kind == b.kind);
    CHECK(a.checked == b.checked);
    if (a.counterexample) {
        REQUIRE(b.counterexample.has_value());
        CHECK(a.counterexample->values == b.counterexample->values);
    }
}

TEST_CASE("[game] exhaustive verification refuses oversized color spaces") {
    const Graph g = Graph::complete(4);
    try {
        verify_exhaustive(g, StrategyProfile(10, {Guesser{TableGuesser(std::vector<int>(1000, 0))},
                                                  Guesser{TableGuesser(std::vector<int>(1000, 0))},
                                                  Guesser{TableGuesser(std::vector<int>(1000, 0))},
                                                  Guesser{TableGuesser(std::vector<int>(1000, 0))}}),
                          100);
        FAIL("expected a budget refusal");
    } catch (const BudgetError& e) {
        CHECK(e.count_decimal() == "10000");
    }
}

TEST_CASE("[game] evaluator rejects profiles that do not fit the graph") {
    const Graph k2 = Graph::complete(2);
    // wrong vertex count
    CHECK_THROWS_AS(Evaluator(k2, StrategyProfile(2, {Guesser{TableGuesser{{0, 1}}}})),
                    InvalidInputError);
    // wrong table size for vertex degree
    CHECK_THROWS_AS(Evaluator(k2, StrategyProfile(2, {Guesser{TableGuesser{{0, 1, 0}}},
                                                      Guesser{TableGuesser{{1, 0}}}})),
                    InvalidInputError);
    // affine coefficient count must match the degree
    CHECK_THROWS_AS(Evaluator(k2, StrategyProfile(2, {Guesser{AffineGuesser{{1, 1}, 0}},
                                                      Guesser{TableGuesser{{1, 0}}}})),
                    InvalidInputError);
    // coloring palette must match the profile
    Evaluator ok(k2, winning_k2());
    CHECK_THROWS_AS(evaluate(k2, winning_k2(), Coloring(3, {0, 2})), InvalidInputError);
}

TEST_CASE("[game] abstaining everywhere loses immediately") {
    const Graph k2 = Graph::complete(2);
    StrategyProfile mute(2, {Guesser{TableGuesser{{kAbstain, kAbstain}}},
                             Guesser{TableGuesser{{kAbstain, kAbstain}}}});
    const VerifyOutcome outcome = verify_exhaustive(k2, mute);
    CHECK(outcome.kind == VerifyOutcome::Kind::counterexample);
    REQUIRE(outcome.counterexample.has_value());
    CHECK(outcome.counterexample->values == std::vector<int>{0, 0});
}
