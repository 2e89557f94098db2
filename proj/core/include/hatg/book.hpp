#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hatg/game.hpp"
#include "hatg/graph.hpp"
#include "hatg/strategy.hpp"

namespace hatg::book {

struct BookParameters {
    int d = 0;          // central clique size
    int q = 0;          // color count
    std::uint64_t m = 0; // outer vertex / family member count
    std::uint64_t s = 0; // onto threshold: every s-subset needs an onto member

    bool operator==(const BookParameters&) const = default;
};

// The classic instantiation q = d^(d-2), m = d^(d+3), s = d^d for d >= 2.
// Values are computed exactly and must fit the field types.
BookParameters lemma_parameters(int d);

struct OntoFamily {
    enum class Verified { none, sampled, exact };

    BookParameters params;
    std::vector<std::vector<int>> members; // flat tables over [0,q)^d, lex input order
    Verified verified = Verified::none;
};

struct OntoCheck {
    bool exact = false;
    bool ok = false;
    std::uint64_t subsets_checked = 0;
    std::optional<std::vector<std::uint64_t>> violating_subset; // domain indices
};

// Exact: enumerates every s-subset of [0,q)^d and demands some member whose
// restriction is onto; stamps the family on success.  The subset count times
// member count times s must fit the budget.
OntoCheck verify_onto_family(OntoFamily& family, std::uint64_t budget = 20'000'000ULL);
OntoCheck verify_onto_family_sampled(const OntoFamily& family, std::uint64_t samples,
                                     std::uint64_t seed);

struct BuildOptions {
    std::uint64_t exact_budget = 20'000'000ULL;
    std::uint64_t samples = 100'000ULL; // used when exact verification is over budget
    int retries = 32;
};

// Seeded uniform random member tables, verified exactly when the budget
// allows and by sampling otherwise; resamples the whole family on failure.
// Throws SearchError (with the violating subset) when retries run out.
OntoFamily build_onto_family(const BookParameters& params, std::uint64_t seed,
                             const BuildOptions& options = {});

// Central guesser j on the book graph: observes the other clique colors and
// all outer hats, recomputes the survivor set {c : for all i, f_i(c) !=
// h(outer_i)}, and plays the handler strategy for it (cached per outer-hat
// vector).  Exposed for strategy deserialization.
StructuredGuesser make_book_central_guesser(
    int which, BookParameters params,
    std::shared_ptr<const std::vector<std::vector<int>>> members);

// Full profile on the book graph with d central and |members| outer vertices;
// outer vertex i plays member i as a plain table.  Requires a verified family
// and s - 1 within the clique capacity.
StrategyProfile construct_book_strategy(const OntoFamily& family);

// Numeric evaluation of the chain q(1-1/q)^(d^d) <= q e^(-d^d/q) <= q
// e^(-d^2) < 1/2.  At the classic point q = d^(d-2) the two exponential
// bounds coincide exactly, since d^d/q = d^2.
struct UnionBoundChain {
    long double value = 0;  // q (1-1/q)^(d^d)
    long double middle = 0; // q e^(-d^d / q)
    long double loose = 0;  // q e^(-d^2)
    bool holds = false;     // value <= middle <= loose < 1/2
};
UnionBoundChain union_bound_chain(int d);

struct CertifiedQ {
    int q = 1;
    BookParameters params;        // witness family parameters (q > 1 only)
    OntoFamily family;            // exact-verified witness (q > 1 only)
    bool end_to_end_verified = false;
    std::uint64_t end_to_end_checked = 0;
};

// Largest q for which an exactly verified family with s - 1 <= capacity(d)
// could be built from at most m_available outer vertices.  Scans q upward,
// stopping when exact verification stops fitting the budget or after two
// consecutive build failures; deterministic given the seed.  The witness
// strategy is additionally verified exhaustively when q^(d+m) is small
// enough.  Returns q = 1 (always winnable: a lone color) when nothing
// stronger certifies.
CertifiedQ certified_q(int d, std::uint64_t m_available, std::uint64_t seed,
                       const BuildOptions& options = {},
                       std::uint64_t verify_budget = 1'000'000ULL);

} // namespace hatg::book
