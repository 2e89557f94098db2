#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "hatg/errors.hpp"
#include "hatg/game.hpp"
#include "hatg/solve.hpp"

using namespace hatg;

namespace {

// Ground-truth oracle: enumerate EVERY table profile (all slots, all q
// values, no abstain -- abstaining is never better than guessing) and test
// each against every coloring directly.  Exponential, so only for the tiny
// anchors; it shares no code with the solver.
bool oracle_winnable(const Graph& graph, int q) {
    const int n = graph.vertex_count();
    std::vector<std::uint64_t> table_sizes(static_cast<std::size_t>(n));
    std::uint64_t total_slots = 0;
    for (int v = 0; v < n; ++v) {
        std::uint64_t cells = 1;
        for (int i = 0; i < graph.degree(v); ++i) cells *= static_cast<std::uint64_t>(q);
        table_sizes[static_cast<std::size_t>(v)] = cells;
        total_slots += cells;
    }
    REQUIRE(total_slots <= 12); // keep q^slots enumerable

    std::uint64_t colorings = 1;
    for (int v = 0; v < n; ++v) colorings *= static_cast<std::uint64_t>(q);

    std::vector<int> slots(static_cast<std::size_t>(total_slots), 0);
    for (;;) {
        // does this profile win every coloring?
        bool wins_all = true;
        for (std::uint64_t c = 0; c < colorings && wins_all; ++c) {
            std::vector<int> values(static_cast<std::size_t>(n));
            std::uint64_t rest = c;
            for (std::size_t v = values.size(); v-- > 0;) {
                values[v] = static_cast<int>(rest % static_cast<std::uint64_t>(q));
                rest /= static_cast<std::uint64_t>(q);
            }
            bool someone_right = false;
            std::uint64_t slot_base = 0;
            for (int v = 0; v < n && !someone_right; ++v) {
                std::uint64_t obs_index = 0;
                for (const int u : graph.neighbors(v)) {
                    obs_index = obs_index * static_cast<std::uint64_t>(q) +
                                static_cast<std::uint64_t>(values[static_cast<std::size_t>(u)]);
                }
                someone_right = slots[static_cast<std::size_t>(slot_base + obs_index)] ==
                                values[static_cast<std::size_t>(v)];
                slot_base += table_sizes[static_cast<std::size_t>(v)];
            }
            wins_all = someone_right;
        }
        if (wins_all) return true;

        std::size_t pos = slots.size();
        while (pos > 0 && ++slots[pos - 1] == q) {
            slots[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) return false;
    }
}

} // namespace

TEST_CASE("[solve] a lone vertex wins with one color and loses with two") {
    const Graph k1 = Graph::complete(1);

    const SolveResult one = solve_hg(k1, 1);
    CHECK(one.winnable);
    REQUIRE(one.witness.has_value());
    CHECK(verify_exhaustive(k1, *one.witness).winning());

    const SolveResult two = solve_hg(k1, 2);
    CHECK_FALSE(two.winnable);
    CHECK_FALSE(two.witness.has_value());

    CHECK(oracle_winnable(k1, 1));
    CHECK_FALSE(oracle_winnable(k1, 2));
}

TEST_CASE("[solve] the edge wins with two colors and loses with three") {
    const Graph k2 = Graph::complete(2);

    const SolveResult two = solve_hg(k2, 2);
    CHECK(two.winnable);
    REQUIRE(two.witness.has_value());
    const VerifyOutcome check = verify_exhaustive(k2, *two.witness);
    CHECK(check.winning());
    CHECK(check.checked == 4);

    const SolveResult three = solve_hg(k2, 3);
    CHECK_FALSE(three.winnable);
    CHECK(three.nodes > 0);

    CHECK(oracle_winnable(k2, 2));
    CHECK_FALSE(oracle_winnable(k2, 3));
}

TEST_CASE("[solve] the triangle wins with three colors") {
    const Graph k3 = Graph::complete(3);
    const SolveResult result = solve_hg(k3, 3);
    CHECK(result.winnable);
    REQUIRE(result.witness.has_value());
    const VerifyOutcome check = verify_exhaustive(k3, *result.witness);
    CHECK(check.winning());
    CHECK(check.checked == 27);
}

TEST_CASE("[solve] witnesses are deterministic") {
    const Graph k2 = Graph::complete(2);
    const SolveResult a = solve_hg(k2, 2);
    const SolveResult b = solve_hg(k2, 2);
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    CHECK(a.nodes == b.nodes);
    for (int v = 0; v < 2; ++v) {
        const auto& ta = std::get<TableGuesser>(a.witness->guesser(v));
        const auto& tb = std::get<TableGuesser>(b.witness->guesser(v));
        CHECK(ta.guesses == tb.guesses);
    }
}

TEST_CASE("[solve] empty graphs never win beyond one color") {
    // no vertex sees anything: with q >= 2 the adversary dodges everyone
    const Graph e3 = Graph::empty_graph(3);
    CHECK(solve_hg(e3, 1).winnable);
    CHECK_FALSE(solve_hg(e3, 2).winnable);
}

TEST_CASE("[solve] the node budget is enforced") {
    CHECK_THROWS_AS(solve_hg(Graph::complete(3), 3, 10), BudgetError);
}
