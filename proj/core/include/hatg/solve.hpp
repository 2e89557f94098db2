#pragma once

#include <cstdint>
#include <optional>

#include "hatg/game.hpp"
#include "hatg/graph.hpp"
#include "hatg/strategy.hpp"

namespace hatg {

struct SolveResult {
    bool winnable;
    // Lexicographically first winning profile (table entries tried in
    // ascending value order, slots in fixed order), present iff winnable.
    std::optional<StrategyProfile> witness;
    std::uint64_t nodes; // assignments explored, including forced ones
};

// Decides whether some strategy profile wins on `graph` with q colors, by
// backtracking over table entries.  A coloring whose guessers are all
// assigned and wrong kills the branch; a coloring with exactly one free
// guesser left forces that entry (unit propagation).  Complete: winnable ==
// false only after exhausting the reduced space.  Throws BudgetError when
// q^n, the table-slot count, or the node budget is exceeded.
SolveResult solve_hg(const Graph& graph, int q, std::uint64_t budget = kDefaultBudget);

} // namespace hatg
