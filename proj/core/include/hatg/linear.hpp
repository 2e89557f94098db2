#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "hatg/game.hpp"
#include "hatg/graph.hpp"
#include "hatg/strategy.hpp"

namespace hatg::linear {

// Prime modulus, checked by trial division.
struct PrimeFieldSpec {
    int p;
    explicit PrimeFieldSpec(int p);
};

// Affine guessing on the complete multipartite graph with m parts of n
// vertices.  Vertex (i,k) has id i*m + k and part k = id % m; it sees every
// vertex of the other parts and guesses
//     f_ik(x) + b_ik = sum over visible (i',j) of coeff * x_{i'j} + b_ik
// over Z_p.  coeffs[v] runs over the visible vertices in ascending id order.
struct LinearStrategy {
    int n = 0;
    int m = 0;
    int p = 0;
    std::vector<std::vector<int>> coeffs; // coeffs[v][position among visible ids]
    std::vector<int> bias;                // bias[v]

    LinearStrategy() = default;
    LinearStrategy(int n, int m, int p, std::vector<std::vector<int>> coeffs,
                   std::vector<int> bias);

    int vertex_count() const { return n * m; }
    int part(int v) const { return v % m; }
    // f_v(x) + b_v mod p; `with_bias = false` drops b_v.
    int affine_value(int v, const Coloring& x, bool with_bias = true) const;
};

LinearStrategy random_linear_strategy(int n, int m, int p, std::uint64_t seed);

Graph multipartite_graph(const LinearStrategy& strategy);
StrategyProfile to_profile(const LinearStrategy& strategy);

// T = [n] x [m] x [0,p); element (i,k,c) has index (i*m + k)*p + c.  Members
// of the derived families pick one element per slot (i,k), so have size w =
// nm.  `r` is the sampling parameter of the containment lemma (elements of a
// random V are kept independently with probability 1/r).
struct GroundSet {
    int n = 0;
    int m = 0;
    int p = 0;
    double r = 2.0;

    std::uint64_t size() const {
        return static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(m) *
               static_cast<std::uint64_t>(p);
    }
    int w() const { return n * m; }
    int index(int i, int k, int c) const { return (i * m + k) * p + c; }
    int slot_of(int element) const { return element / p; }
    int value_of(int element) const { return element % p; }
};

enum class FamilyKind { F, G }; // F keeps the bias term, G drops it

struct MaterializedFamily {
    std::vector<std::vector<int>> members; // each sorted ascending ground indices
};

struct ImplicitFamily {
    FamilyKind kind = FamilyKind::F;
    LinearStrategy strategy;
};

struct SpreadFamily {
    GroundSet ground;
    std::variant<MaterializedFamily, ImplicitFamily> rep;

    bool is_implicit() const { return std::holds_alternative<ImplicitFamily>(rep); }
    std::uint64_t member_count() const;
};

SpreadFamily implicit_family(FamilyKind kind, LinearStrategy strategy);

// The member for coloring x: one ground element per slot (i,k) with value
// x_ik - f_ik(x) - b_ik (kind F) or x_ik - f_ik(x) (kind G), mod p.  Returned
// as ascending ground indices.
std::vector<int> materialize_member(const SpreadFamily& family, const Coloring& x);

// All p^(nm) members, colorings in lexicographic order (a multiset: distinct
// colorings may induce equal members).
SpreadFamily materialize_all(const SpreadFamily& family, std::uint64_t budget = 100'000ULL);

struct SpreadReport {
    double r_star = 0;             // min over Z of (N / count(Z))^(1/|Z|)
    std::uint64_t members = 0;     // N
    std::vector<int> argmin;       // a minimizing Z, ascending ground indices
    std::uint64_t argmin_count = 0;
    std::uint64_t subsets_counted = 0; // distinct nonempty Z with count > 0
};

// Exact enumeration over every nonempty subset of every member (the only Z
// with nonzero count).  member_count * 2^w must stay within the budget.
SpreadReport spread_value(const SpreadFamily& family, std::uint64_t budget = 10'000'000ULL);

// Exact check of r_star >= p^(1/m): integer comparison N^m >= count^m * p^|Z|
// for every counted subset, immune to rounding.
bool spread_at_least_p_pow_inv_m(const SpreadFamily& family, int p, int m,
                                 std::uint64_t budget = 10'000'000ULL);

// Complete backtracking search for a coloring x whose member lies inside
// `allowed` (indexed by ground element, one byte each).  Slots are filled in
// (k,i) lexicographic order, values ascending, so the first solution is
// deterministic; nullopt means no coloring works.
std::optional<Coloring> find_member_within(const SpreadFamily& family,
                                           const std::vector<char>& allowed);

struct DefeatOutcome {
    std::optional<Coloring> coloring; // z with every guess wrong
    int retries_used = 0;             // sampled splits consumed
};

// Splits T at random into V1/V2 (a coin per element, seeded), finds x_F with
// the F-member inside V1 and x_G with the G-member inside V2, and returns
// z = x_F - x_G mod p.  Disjointness forces every slot's affine guess to
// miss, which is asserted via the evaluator before returning.  nullopt
// coloring after `retries` splits is a report, not an error: the underlying
// guarantee only kicks in for p large enough.
DefeatOutcome defeat_linear(const LinearStrategy& strategy, std::uint64_t seed,
                            int retries = 64);

// Lexicographic scan of all p^(nm) colorings; the first on which every
// vertex guesses wrong, or nullopt when the strategy wins.
std::optional<Coloring> brute_force_defeat(const LinearStrategy& strategy,
                                           std::uint64_t budget = 100'000'000ULL);

struct TrialReport {
    int trials = 0;
    int successes = 0;
    double frequency = 0;
};

// Empirical containment frequency: per trial, sample V (keep each element
// with probability 1/ground.r) and test whether some member fits inside V.
TrialReport spread_lemma_trial(const SpreadFamily& family, int trials, std::uint64_t seed);

} // namespace hatg::linear
