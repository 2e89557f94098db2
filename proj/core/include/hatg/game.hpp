#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hatg/graph.hpp"
#include "hatg/strategy.hpp"

namespace hatg {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ULL;

// Checks that the profile is defined on the graph (one guesser per vertex,
// tables total on q^deg inputs, affine coefficient counts matching degrees)
// and then evaluates colorings without re-validating.  Each Evaluator owns
// scratch space, so use one instance per thread.
class Evaluator {
  public:
    Evaluator(const Graph& graph, const StrategyProfile& profile);

    // Vertices whose guess equals their own color, ascending.
    std::vector<int> correct_vertices(const std::vector<int>& values);
    // True iff some vertex guesses correctly.  Probes cheap (low-degree)
    // vertices first so expensive guessers are consulted only when needed.
    bool any_correct(const std::vector<int>& values);

    const Graph& graph() const { return *graph_; }
    const StrategyProfile& profile() const { return *profile_; }

  private:
    int guess_for(int v, const std::vector<int>& values);

    const Graph* graph_;
    const StrategyProfile* profile_;
    std::vector<int> probe_order_; // vertices sorted by degree, then index
    std::vector<int> obs_;         // scratch
};

std::vector<int> evaluate(const Graph& graph, const StrategyProfile& profile,
                          const Coloring& coloring);
bool any_correct(const Graph& graph, const StrategyProfile& profile, const Coloring& coloring);

struct VerifyOutcome {
    enum class Kind { winning, counterexample, none_found };

    Kind kind;
    std::optional<Coloring> counterexample;
    // Colorings up to and including the reported counterexample in scan
    // order, or the full count when the scan was clean.
    std::uint64_t checked = 0;

    bool winning() const { return kind == Kind::winning; }
};

// Enumerates all q^n colorings in lexicographic order of the value vector and
// reports the first one on which every vertex guesses incorrectly.  Throws
// BudgetError when q^n exceeds the budget (the error carries the exact count
// as a decimal string).  Workers scan contiguous lexicographic blocks and the
// least counterexample wins, so results do not depend on thread count.
VerifyOutcome verify_exhaustive(const Graph& graph, const StrategyProfile& profile,
                                std::uint64_t budget = kDefaultBudget);

// Draws `count` colorings from seeded generators (one derived seed per sample
// index) and reports the first failing sample.  A clean run is none_found,
// never winning.
VerifyOutcome verify_sampled(const Graph& graph, const StrategyProfile& profile,
                             std::uint64_t count, std::uint64_t seed);

} // namespace hatg
