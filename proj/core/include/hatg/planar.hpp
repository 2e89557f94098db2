#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "hatg/biguint.hpp"
#include "hatg/game.hpp"
#include "hatg/graph.hpp"
#include "hatg/rng.hpp"
#include "hatg/strategy.hpp"

namespace hatg::planar {

// Unordered pairs {g1 < g2} of distinct colors, ranked in colexicographic
// order: {0,1}=0, {0,2}=1, {1,2}=2, {0,3}=3, ...
int pair_count(int q);
int colex_index(int g1, int g2);
std::pair<int, int> colex_pair(int index);

// f from ordered color pairs (a, b) to unordered pairs of distinct colors.
struct PairFunction {
    int q = 0;
    std::vector<std::pair<int, int>> table; // input (a,b) at index a*q + b

    const std::pair<int, int>& at(int a, int b) const;
};

// digits[j] = colex rank of the output pair on input j.
PairFunction function_from_digits(int q, const std::vector<int>& digits);

struct PairFunctionFamily {
    int q = 0;
    int t = 0; // central colorings each covering member must separate
    std::vector<PairFunction> members;
    bool cover_verified = false; // set only by an exact verification pass
};

// The family of all pair functions on [0,q)^2, one member per digit vector.
// Far too large to materialize beyond q=2, so members are produced on demand
// from their digits.
class FullFamily {
  public:
    explicit FullFamily(int q);

    int q() const { return q_; }
    BigUint member_count() const; // pair_count(q) ^ (q^2)

    PairFunction member(const std::vector<int>& digits) const;
    std::vector<int> random_member_digits(Prng& rng) const;

    // The member mapping inputs[j] to {2j, 2j+1} (and every other input to
    // pair 0).  With q/2 inputs the images partition [0,q), which is what
    // the survivor elimination below needs.
    std::vector<int> partition_member_digits(const std::vector<int>& inputs) const;

  private:
    int q_;
};

// Materializes every member.  Only q=2 fits any sane budget; otherwise a
// BudgetError reports the exact member count in decimal.
PairFunctionFamily build_full_family(int q, std::uint64_t budget = kDefaultBudget);

// Seeded random members plus constructive repair, then an exact cover check.
// The result always carries cover_verified = true.
PairFunctionFamily build_cover_family(int q, int t, std::uint64_t seed,
                                      std::uint64_t budget = kDefaultBudget);

struct CoverCheck {
    bool exact = false;
    bool ok = false;
    std::uint64_t subsets_checked = 0;
    std::optional<std::vector<int>> violating_subset; // inputs, as a*q + b
};

// A family covers a t-subset of inputs when some member maps those inputs to
// pairwise-disjoint pairs whose union is all of [0,q).  Exact verification
// enumerates all C(q^2, t) subsets and stamps the family on success.
CoverCheck verify_cover_family(PairFunctionFamily& family, std::uint64_t budget = kDefaultBudget);
CoverCheck verify_cover_family_sampled(const PairFunctionFamily& family, std::uint64_t samples,
                                       std::uint64_t seed);
// Same checks against the implicit full family, whose covering member for any
// subset can be written down directly.
CoverCheck verify_full_cover_sampled(int q, std::uint64_t samples, std::uint64_t seed);
CoverCheck verify_full_cover_exact(int q, std::uint64_t budget);

// Central colorings (a, b) on which every outer pair guesses wrong, given the
// pair sums h(x_i)+h(y_i) mod q; one sum per member, in family order.
std::vector<std::pair<int, int>> surviving_central_colorings(const PairFunctionFamily& family,
                                                             const std::vector<int>& outer_sums);

// Upper-bounds the full family's survivor set without enumerating members:
// while at least q/2 candidates remain, the partition member for the first
// q/2 of them is constructed, its sum is obtained from the oracle, and the
// candidate whose pair contains that sum is eliminated.  Every elimination is
// witnessed by an explicit member, so the result is a superset of the true
// survivor set, of size at most q/2 - 1.
std::vector<std::pair<int, int>> surviving_central_bound(
    int q, const std::function<int(const std::vector<int>&)>& sum_of_member);

// The construction's guessers, also used to rebuild strategies from their
// serialized form.  Outer pair i observes (h(u), h(v), partner); member x
// guesses g1 - partner, member y guesses g2 - partner, mod q.  A central
// guesser observes (partner, outer hats...), recomputes the survivor set
// from the pair sums, and plays the handler strategy for it (cached per sums
// vector).
StructuredGuesser make_outer_guesser(int q, int pair_index, bool second_member, PairFunction f);
StructuredGuesser make_central_guesser(int q, int which,
                                       std::shared_ptr<const std::vector<PairFunction>> members);

// The full strategy on the construction graph with one outer pair per family
// member: pair i guesses g1 - h(y_i) and g2 - h(x_i) off its member, the
// central pair computes the survivor set and plays the handler strategy for
// it.  Requires a cover-verified family and q <= 12 (the survivor bound must
// stay within what a 2-clique can handle).
StrategyProfile construct_planar_strategy(int q, const PairFunctionFamily& family);

// Defeats any 13-color profile on a construction-shaped graph: fixes the six
// central candidates {0,1}x{0,1,2}, picks per outer pair the first of its 169
// colorings that is all-wrong under every candidate, then the first candidate
// on which both central vertices are wrong.  Counting guarantees both scans
// succeed; if one does not, a ContractError flags the contradiction.
Coloring adversary_13(const Graph& graph, const StrategyProfile& profile);

// Planarity evidence for the construction shape: the edge-count bound holds
// and an explicit rotation system traces to the Euler-consistent face count.
bool euler_bound_ok(const Graph& graph);
int rotation_face_count(int m);

} // namespace hatg::planar
