// Microbenchmarks for the hot paths: solving, verification, implicit family
// member construction, known-set handling, and the random graph pipeline.

#include <cstdint>
#include <set>
#include <vector>

#include <benchmark/benchmark.h>

#include "hatg/clique_handler.hpp"
#include "hatg/game.hpp"
#include "hatg/graph.hpp"
#include "hatg/linear.hpp"
#include "hatg/planar.hpp"
#include "hatg/randgraph.hpp"
#include "hatg/rng.hpp"
#include "hatg/solve.hpp"

namespace {

void BM_SolveK3q3(benchmark::State& state) {
    const hatg::Graph graph = hatg::Graph::complete(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hatg::solve_hg(graph, 3));
    }
}
BENCHMARK(BM_SolveK3q3);

void BM_VerifyExhaustiveK3q3(benchmark::State& state) {
    const hatg::Graph graph = hatg::Graph::complete(3);
    const auto result = hatg::solve_hg(graph, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hatg::verify_exhaustive(graph, *result.witness));
    }
}
BENCHMARK(BM_VerifyExhaustiveK3q3);

void BM_ImplicitMemberQ12(benchmark::State& state) {
    hatg::planar::FullFamily family(12);
    hatg::Prng rng(7);
    const std::vector<int> digits = family.random_member_digits(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(family.member(digits));
    }
}
BENCHMARK(BM_ImplicitMemberQ12);

void BM_SurvivorBoundQ12(benchmark::State& state) {
    std::uint64_t trial = 0;
    for (auto _ : state) {
        const std::uint64_t seed = hatg::derive_seed(11, trial++);
        const auto oracle = [seed](const std::vector<int>& digits) {
            std::uint64_t h = seed;
            for (const int d : digits) h = hatg::splitmix64(h ^ static_cast<std::uint64_t>(d));
            return static_cast<int>(h % 12);
        };
        benchmark::DoNotOptimize(hatg::planar::surviving_central_bound(12, oracle));
    }
}
BENCHMARK(BM_SurvivorBoundQ12);

void BM_HandleFiveSet(benchmark::State& state) {
    hatg::Prng rng(13);
    for (auto _ : state) {
        std::set<std::vector<int>> rows;
        while (rows.size() < 5) rows.insert({rng.color(13), rng.color(13)});
        const hatg::KnownSet ks(2, 13,
                                std::vector<std::vector<int>>(rows.begin(), rows.end()));
        benchmark::DoNotOptimize(hatg::handle_known_set(ks));
    }
}
BENCHMARK(BM_HandleFiveSet);

void BM_SampleGnp1024(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hatg::randgraph::sample_gnp(1024, seed++));
    }
}
BENCHMARK(BM_SampleGnp1024);

void BM_FindBook1024(benchmark::State& state) {
    const auto sample = hatg::randgraph::sample_gnp(1024, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hatg::randgraph::find_book(sample, 2));
    }
}
BENCHMARK(BM_FindBook1024);

void BM_MaterializeMember(benchmark::State& state) {
    const auto strategy = hatg::linear::random_linear_strategy(2, 2, 7, 21);
    const auto family = hatg::linear::implicit_family(hatg::linear::FamilyKind::F, strategy);
    hatg::Prng rng(22);
    for (auto _ : state) {
        std::vector<int> values(4);
        for (auto& v : values) v = rng.color(7);
        benchmark::DoNotOptimize(
            hatg::linear::materialize_member(family, hatg::Coloring(7, values)));
    }
}
BENCHMARK(BM_MaterializeMember);

void BM_DefeatLinear227(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        const auto strategy = hatg::linear::random_linear_strategy(2, 2, 7, seed);
        benchmark::DoNotOptimize(hatg::linear::defeat_linear(strategy, seed));
        ++seed;
    }
}
BENCHMARK(BM_DefeatLinear227);

void BM_VerifySampledPlanarQ4(benchmark::State& state) {
    auto family = hatg::planar::build_cover_family(4, 2, 99);
    const auto profile = hatg::planar::construct_planar_strategy(4, family);
    const hatg::Graph graph =
        hatg::Graph::planar_construction(4, static_cast<int>(family.members.size()));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hatg::verify_sampled(graph, profile, 1000, seed++));
    }
}
BENCHMARK(BM_VerifySampledPlanarQ4);

} // namespace

BENCHMARK_MAIN();
