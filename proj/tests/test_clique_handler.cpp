#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "hatg/biguint.hpp"
#include "hatg/clique_handler.hpp"
#include "hatg/errors.hpp"
#include "hatg/rng.hpp"
#include "hatg/strategy.hpp"

using namespace hatg;

namespace {

std::vector<std::vector<int>> c6() {
    return {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}};
}

// every member of the set must make some clique vertex guess its own color
void check_pointwise(const KnownSet& ks, const CliqueStrategy& strategy) {
    for (const auto& member : ks.set) {
        bool someone_right = false;
        for (int v = 0; v < ks.d && !someone_right; ++v) {
            std::vector<int> others;
            for (int u = 0; u < ks.d; ++u) {
                if (u != v) others.push_back(member[static_cast<std::size_t>(u)]);
            }
            someone_right = strategy.guess(v, others) == member[static_cast<std::size_t>(v)];
        }
        CHECK(someone_right);
    }
}

std::vector<std::vector<int>> random_known_set(int d, int q, int size, Prng& rng) {
    std::set<std::vector<int>> rows;
    while (static_cast<int>(rows.size()) < size) {
        std::vector<int> row(static_cast<std::size_t>(d));
        for (auto& c : row) c = rng.color(q);
        rows.insert(std::move(row));
    }
    return {rows.begin(), rows.end()};
}

} // namespace

TEST_CASE("[clique_handler] capacity follows the power-sum formula") {
    CHECK(capacity(1) == BigUint{1});
    CHECK(capacity(2) == BigUint{5});
    CHECK(capacity(3) == BigUint{32});
    CHECK(capacity(4) == BigUint{288});

    // independent accumulation of sum of i^i
    for (int d = 1; d <= 8; ++d) {
        BigUint sum{0};
        for (std::uint64_t i = 1; i <= static_cast<std::uint64_t>(d); ++i) {
            sum = sum + BigUint::pow(i, i);
        }
        CHECK(capacity(d) == sum);
    }
    CHECK_THROWS_AS(capacity(0), InvalidInputError);
}

TEST_CASE("[clique_handler] known sets are canonicalized and validated") {
    const KnownSet ks(2, 3, {{2, 1}, {0, 0}, {1, 2}});
    CHECK(ks.set == std::vector<std::vector<int>>{{0, 0}, {1, 2}, {2, 1}});
    CHECK_THROWS_AS(KnownSet(2, 3, {{0, 0}, {0, 0}}), InvalidInputError);
    CHECK_THROWS_AS(KnownSet(2, 3, {{0, 3}}), InvalidInputError);
    CHECK_THROWS_AS(KnownSet(2, 3, {{0}}), InvalidInputError);
    CHECK_THROWS_AS(KnownSet(0, 3, {}), InvalidInputError);
}

TEST_CASE("[clique_handler] singleton sets are trivially handleable") {
    const KnownSet ks(2, 13, {{7, 11}});
    const HandleOutcome outcome = handle_known_set(ks);
    REQUIRE(outcome.feasible());
    check_pointwise(ks, *outcome.strategy);
}

TEST_CASE("[clique_handler] the 2x3 grid defeats a pair of guessers") {
    const KnownSet ks(2, 13, c6());
    const HandleOutcome outcome = handle_known_set(ks);
    CHECK_FALSE(outcome.feasible());
    CHECK_FALSE(is_handleable(ks));
    REQUIRE(outcome.certificate.has_value());
    // vertex 0 observes 3 projections with 2 own colors + abstain each,
    // vertex 1 observes 2 projections with 3 own colors + abstain each:
    // 3^3 * 4^2 reduced assignments in total
    CHECK(outcome.certificate->reduced_space == "432");
    CHECK(outcome.certificate->nodes_explored > 0);
    CHECK(outcome.nodes == outcome.certificate->nodes_explored);
}

TEST_CASE("[clique_handler] the grid set stays infeasible at q=12") {
    CHECK_FALSE(is_handleable(KnownSet(2, 12, c6())));
}

TEST_CASE("[clique_handler] a constant coordinate rescues a six-element set") {
    // second coordinate always 5: vertex 1 just says 5
    const KnownSet ks(2, 13, {{0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5}, {5, 5}});
    const HandleOutcome outcome = handle_known_set(ks);
    REQUIRE(outcome.feasible());
    check_pointwise(ks, *outcome.strategy);
}

TEST_CASE("[clique_handler] five-element pair sets are always handleable") {
    Prng rng(314);
    for (int trial = 0; trial < 200; ++trial) {
        const int q = (trial % 2 == 0) ? 12 : 13;
        const KnownSet ks(2, q, random_known_set(2, q, 5, rng));
        const HandleOutcome outcome = handle_known_set(ks);
        REQUIRE(outcome.feasible());
        check_pointwise(ks, *outcome.strategy);
    }
}

TEST_CASE("[clique_handler] triples up to capacity are handleable") {
    // q = 7 keeps the per-observation collision rate low enough for the
    // fixed-order search; denser grids can push it into the node budget.
    Prng rng(2718);
    for (int trial = 0; trial < 20; ++trial) {
        const KnownSet ks(3, 7, random_known_set(3, 7, 32, rng));
        const HandleOutcome outcome = handle_known_set(ks);
        REQUIRE(outcome.feasible());
        check_pointwise(ks, *outcome.strategy);
    }
}

TEST_CASE("[clique_handler] strategies only use occurring colors or abstain") {
    Prng rng(55);
    const KnownSet ks(2, 13, random_known_set(2, 13, 5, rng));
    const HandleOutcome outcome = handle_known_set(ks);
    REQUIRE(outcome.feasible());
    for (int v = 0; v < 2; ++v) {
        std::set<int> own;
        for (const auto& member : ks.set) own.insert(member[static_cast<std::size_t>(v)]);
        for (const auto& [obs, guess] : outcome.strategy->tables[static_cast<std::size_t>(v)]) {
            CHECK((guess == kAbstain || own.count(guess) == 1));
        }
    }
}

TEST_CASE("[clique_handler] the node budget is enforced") {
    const KnownSet ks(2, 13, c6());
    CHECK_THROWS_AS(handle_known_set(ks, 2), BudgetError);
}
