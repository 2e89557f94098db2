#include "hatg/game.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#include "hatg/biguint.hpp"
#include "hatg/errors.hpp"
#include "hatg/numeric.hpp"
#include "hatg/parallel.hpp"
#include "hatg/rng.hpp"

namespace hatg {

namespace {

void validate_profile(const Graph& graph, const StrategyProfile& profile) {
    if (profile.vertex_count() != graph.vertex_count()) {
        throw InvalidInputError("strategy has " + std::to_string(profile.vertex_count()) +
                                " guessers for a graph on " +
                                std::to_string(graph.vertex_count()) + " vertices");
    }
    const int q = profile.q();
    for (int v = 0; v < graph.vertex_count(); ++v) {
        const std::size_t deg = graph.neighbors(v).size();
        const Guesser& g = profile.guesser(v);
        if (const auto* t = std::get_if<TableGuesser>(&g)) {
            const auto want =
                checked_pow_u64(static_cast<std::uint64_t>(q), static_cast<unsigned>(deg));
            if (!want || t->guesses.size() != *want) {
                throw InvalidInputError("table at vertex " + std::to_string(v) +
                                        " is not total on its q^deg observations");
            }
        } else if (const auto* a = std::get_if<AffineGuesser>(&g)) {
            if (a->coeffs.size() != deg) {
                throw InvalidInputError("affine guesser at vertex " + std::to_string(v) +
                                        " has the wrong coefficient count");
            }
        }
    }
}

void decode_coloring(std::uint64_t index, int q, std::vector<int>& out) {
    for (std::size_t pos = out.size(); pos-- > 0;) {
        out[pos] = static_cast<int>(index % static_cast<std::uint64_t>(q));
        index /= static_cast<std::uint64_t>(q);
    }
}

// Advances the value vector to the next coloring in lexicographic order.
bool odometer_step(std::vector<int>& values, int q) {
    for (std::size_t pos = values.size(); pos-- > 0;) {
        if (++values[pos] < q) return true;
        values[pos] = 0;
    }
    return false;
}

} // namespace

Evaluator::Evaluator(const Graph& graph, const StrategyProfile& profile)
    : graph_(&graph), profile_(&profile) {
    validate_profile(graph, profile);
    probe_order_.resize(static_cast<std::size_t>(graph.vertex_count()));
    for (int v = 0; v < graph.vertex_count(); ++v) probe_order_[static_cast<std::size_t>(v)] = v;
    std::stable_sort(probe_order_.begin(), probe_order_.end(),
                     [&](int a, int b) { return graph.degree(a) < graph.degree(b); });
}

int Evaluator::guess_for(int v, const std::vector<int>& values) {
    const auto& nb = graph_->neighbors(v);
    obs_.resize(nb.size());
    for (std::size_t j = 0; j < nb.size(); ++j) {
        obs_[j] = values[static_cast<std::size_t>(nb[j])];
    }
    return profile_->guess(v, obs_);
}

std::vector<int> Evaluator::correct_vertices(const std::vector<int>& values) {
    std::vector<int> hits;
    for (int v = 0; v < graph_->vertex_count(); ++v) {
        if (guess_for(v, values) == values[static_cast<std::size_t>(v)]) hits.push_back(v);
    }
    return hits;
}

bool Evaluator::any_correct(const std::vector<int>& values) {
    for (const int v : probe_order_) {
        if (guess_for(v, values) == values[static_cast<std::size_t>(v)]) return true;
    }
    return false;
}

std::vector<int> evaluate(const Graph& graph, const StrategyProfile& profile,
                          const Coloring& coloring) {
    if (coloring.q != profile.q()) throw InvalidInputError("coloring q differs from strategy q");
    if (coloring.size() != graph.vertex_count()) {
        throw InvalidInputError("coloring length differs from vertex count");
    }
    Evaluator ev(graph, profile);
    return ev.correct_vertices(coloring.values);
}

bool any_correct(const Graph& graph, const StrategyProfile& profile, const Coloring& coloring) {
    if (coloring.q != profile.q()) throw InvalidInputError("coloring q differs from strategy q");
    if (coloring.size() != graph.vertex_count()) {
        throw InvalidInputError("coloring length differs from vertex count");
    }
    Evaluator ev(graph, profile);
    return ev.any_correct(coloring.values);
}

VerifyOutcome verify_exhaustive(const Graph& graph, const StrategyProfile& profile,
                                std::uint64_t budget) {
    validate_profile(graph, profile);
    const int q = profile.q();
    const int n = graph.vertex_count();
    const auto total =
        checked_pow_u64(static_cast<std::uint64_t>(q), static_cast<unsigned>(n));
    if (!total || *total > budget) {
        throw BudgetError("exhaustive verification needs " +
                              BigUint::pow(static_cast<std::uint64_t>(q),
                                           static_cast<unsigned>(n))
                                  .to_string() +
                              " evaluations, over the budget of " + std::to_string(budget),
                          BigUint::pow(static_cast<std::uint64_t>(q), static_cast<unsigned>(n))
                              .to_string());
    }

    std::atomic<std::uint64_t> best{*total}; // least failing index found so far
    parallel_blocks(*total, [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
        Evaluator ev(graph, profile);
        std::vector<int> values(static_cast<std::size_t>(n), 0);
        decode_coloring(begin, q, values);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            if (idx >= best.load(std::memory_order_relaxed)) break;
            if (!ev.any_correct(values)) {
                std::uint64_t seen = best.load(std::memory_order_relaxed);
                while (idx < seen &&
                       !best.compare_exchange_weak(seen, idx, std::memory_order_relaxed)) {
                }
                break;
            }
            odometer_step(values, q);
        }
    });

    const std::uint64_t found = best.load();
    if (found == *total) {
        return VerifyOutcome{VerifyOutcome::Kind::winning, std::nullopt, *total};
    }
    std::vector<int> values(static_cast<std::size_t>(n), 0);
    decode_coloring(found, q, values);
    return VerifyOutcome{VerifyOutcome::Kind::counterexample, Coloring(q, std::move(values)),
                         found + 1};
}

VerifyOutcome verify_sampled(const Graph& graph, const StrategyProfile& profile,
                             std::uint64_t count, std::uint64_t seed) {
    validate_profile(graph, profile);
    const int q = profile.q();
    const int n = graph.vertex_count();

    std::atomic<std::uint64_t> best{count};
    parallel_blocks(count, [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
        Evaluator ev(graph, profile);
        std::vector<int> values(static_cast<std::size_t>(n), 0);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            if (idx >= best.load(std::memory_order_relaxed)) break;
            Prng rng(derive_seed(seed, idx));
            for (auto& v : values) v = rng.color(q);
            if (!ev.any_correct(values)) {
                std::uint64_t seen = best.load(std::memory_order_relaxed);
                while (idx < seen &&
                       !best.compare_exchange_weak(seen, idx, std::memory_order_relaxed)) {
                }
                break;
            }
        }
    });

    const std::uint64_t found = best.load();
    if (found == count) {
        return VerifyOutcome{VerifyOutcome::Kind::none_found, std::nullopt, count};
    }
    Prng rng(derive_seed(seed, found));
    std::vector<int> values(static_cast<std::size_t>(n), 0);
    for (auto& v : values) v = rng.color(q);
    return VerifyOutcome{VerifyOutcome::Kind::counterexample, Coloring(q, std::move(values)),
                         found + 1};
}

} // namespace hatg
