#include "hatg/strategy.hpp"

#include <string>

#include "hatg/errors.hpp"
#include "hatg/numeric.hpp"
#include "hatg/rng.hpp"

namespace hatg {

std::uint64_t observation_index(std::span<const int> obs, int q) {
    std::uint64_t index = 0;
    for (const int c : obs) {
        index = index * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(c);
    }
    return index;
}

StructuredGuesser make_seeded_random_guesser(int q, int vertex, std::uint64_t seed) {
    if (q < 1) throw InvalidInputError("seeded guesser needs q >= 1");
    if (vertex < 0) throw InvalidInputError("seeded guesser needs a vertex id");
    StructuredGuesser g;
    g.meta = {{"role", "seeded-random"}, {"q", q}, {"vertex", vertex}, {"seed", seed}};
    const std::uint64_t base = derive_seed(seed, static_cast<std::uint64_t>(vertex));
    g.fn = [q, base](std::span<const int> obs) -> int {
        std::uint64_t state = base;
        for (const int c : obs) {
            state = splitmix64(state ^ (static_cast<std::uint64_t>(c) + 1));
        }
        return static_cast<int>(state % static_cast<std::uint64_t>(q));
    };
    return g;
}

StrategyProfile::StrategyProfile(int q, std::vector<Guesser> guessers)
    : q_(q), guessers_(std::move(guessers)) {
    if (q < 1) throw InvalidInputError("strategy needs q >= 1");
    bool any_affine = false;
    for (const auto& g : guessers_) {
        if (const auto* t = std::get_if<TableGuesser>(&g)) {
            for (const int v : t->guesses) {
                if (v < kAbstain || v >= q) {
                    throw InvalidInputError("table guess out of range");
                }
            }
        } else if (const auto* a = std::get_if<AffineGuesser>(&g)) {
            any_affine = true;
            if (a->bias < 0 || a->bias >= q) {
                throw InvalidInputError("affine bias out of range");
            }
            for (const int c : a->coeffs) {
                if (c < 0 || c >= q) throw InvalidInputError("affine coefficient out of range");
            }
        } else {
            const auto& s = std::get<StructuredGuesser>(g);
            if (!s.fn) throw InvalidInputError("structured guesser without a function");
        }
    }
    if (any_affine && !is_prime(static_cast<std::uint64_t>(q))) {
        throw InvalidInputError("affine guessers need a prime q, got " + std::to_string(q));
    }
}

const Guesser& StrategyProfile::guesser(int v) const {
    if (v < 0 || v >= vertex_count()) throw InvalidInputError("vertex out of range");
    return guessers_[static_cast<std::size_t>(v)];
}

int StrategyProfile::guess(int v, std::span<const int> obs) const {
    const Guesser& g = guesser(v);
    if (const auto* t = std::get_if<TableGuesser>(&g)) {
        const std::uint64_t idx = observation_index(obs, q_);
        if (idx >= t->guesses.size()) throw InvalidInputError("observation outside table");
        return t->guesses[idx];
    }
    if (const auto* a = std::get_if<AffineGuesser>(&g)) {
        if (a->coeffs.size() != obs.size()) {
            throw InvalidInputError("affine coefficient count does not match observations");
        }
        std::int64_t acc = a->bias;
        for (std::size_t j = 0; j < obs.size(); ++j) {
            acc += static_cast<std::int64_t>(a->coeffs[j]) * obs[j];
        }
        return static_cast<int>(acc % q_);
    }
    return std::get<StructuredGuesser>(g).fn(obs);
}

} // namespace hatg
