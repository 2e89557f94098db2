#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hatg/biguint.hpp"

namespace hatg {

// A clique of d vertices that knows its joint coloring lies in `set` and must
// guarantee one correct guess on every member.
struct KnownSet {
    int d;
    int q;
    std::vector<std::vector<int>> set; // canonically sorted, distinct

    KnownSet(int d, int q, std::vector<std::vector<int>> set);
};

// Sum of i^i for i = 1..d: the known-set size a d-clique is expected to
// handle.  Grows fast, hence the big integer.
BigUint capacity(int d);

// Guess tables over the reduced domain: only observation tuples that occur as
// projections of the known set are stored; everything else defaults to 0.
struct CliqueStrategy {
    int d = 0;
    int q = 0;
    std::vector<std::map<std::vector<int>, int>> tables;

    // `others`: colors of the other d-1 clique vertices, ascending vertex
    // order.  Returns a color or kAbstain.
    int guess(int v, const std::vector<int>& others) const;
};

struct InfeasibleCertificate {
    std::uint64_t nodes_explored = 0;
    // Size of the reduced strategy space the search exhausted, as a decimal
    // string (product over slots of candidate-guess counts).
    std::string reduced_space;
};

struct HandleOutcome {
    std::optional<CliqueStrategy> strategy;          // present iff feasible
    std::optional<InfeasibleCertificate> certificate; // present iff infeasible
    std::uint64_t nodes = 0;

    bool feasible() const { return strategy.has_value(); }
};

// Backtracking over the reduced space: per vertex and per observed projection
// of the set, the only useful guesses are own colors occurring there, plus
// abstain.  Colors are tried in ascending order, abstain last; slots in
// (vertex, observation) lexicographic order.  Complete, so an infeasible
// outcome is a proof.  Throws BudgetError when the node budget is exceeded.
HandleOutcome handle_known_set(const KnownSet& ks, std::uint64_t budget = 100'000'000ULL);

bool is_handleable(const KnownSet& ks, std::uint64_t budget = 100'000'000ULL);

} // namespace hatg
