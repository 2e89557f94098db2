#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace hatg {

// A guess is a color in [0, q) or kAbstain, which never counts as correct.
inline constexpr int kAbstain = -1;

// Observations are the colors of a vertex's neighbors in ascending vertex
// order.  Tables are laid out in lexicographic order of the observation
// vector, so the first neighbor is the most significant digit.
std::uint64_t observation_index(std::span<const int> obs, int q);

// Flat lookup table over all q^deg observations.
struct TableGuesser {
    std::vector<int> guesses;
};

// guess = (bias + sum coeffs[j] * obs[j]) mod q.  Only meaningful when q is
// prime; StrategyProfile enforces that.
struct AffineGuesser {
    std::vector<int> coeffs;
    int bias = 0;
};

// Computes the guess on demand.  `meta` carries enough information to rebuild
// the function after a round-trip through JSON (see json_io).
struct StructuredGuesser {
    std::function<int(std::span<const int>)> fn;
    nlohmann::json meta;
};

using Guesser = std::variant<TableGuesser, AffineGuesser, StructuredGuesser>;

// Pseudorandom but fully reproducible guessing: the guess is a seeded hash
// of (vertex, observation vector) reduced mod q.  Stands in for a random
// table when the observation space is too large to materialize.
StructuredGuesser make_seeded_random_guesser(int q, int vertex, std::uint64_t seed);

// One guesser per vertex, all sharing the same palette size q.
class StrategyProfile {
  public:
    StrategyProfile(int q, std::vector<Guesser> guessers);

    int q() const { return q_; }
    int vertex_count() const { return static_cast<int>(guessers_.size()); }
    const std::vector<Guesser>& guessers() const { return guessers_; }
    const Guesser& guesser(int v) const;

    // Evaluates vertex v's guesser on the given observations.  Bounds on the
    // observation values are the caller's responsibility; the result is
    // either kAbstain or a color in [0, q).
    int guess(int v, std::span<const int> obs) const;

  private:
    int q_;
    std::vector<Guesser> guessers_;
};

} // namespace hatg
