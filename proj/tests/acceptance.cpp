// Acceptance suite: desk-scale anchors for every headline construction.
// Each criterion prints exactly one PASS/FAIL line; the exit code is the
// number of failing criteria.  All randomness is seeded, so a pass is
// reproducible bit-for-bit.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hatg/biguint.hpp"
#include "hatg/book.hpp"
#include "hatg/clique_handler.hpp"
#include "hatg/game.hpp"
#include "hatg/graph.hpp"
#include "hatg/json_io.hpp"
#include "hatg/linear.hpp"
#include "hatg/planar.hpp"
#include "hatg/randgraph.hpp"
#include "hatg/rng.hpp"
#include "hatg/solve.hpp"
#include "hatg/strategy.hpp"

namespace {

struct Check {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why << what;
        }
    }
};

// ---------------------------------------------------------------------------
// 1. Planar family mechanics at q = 12: the both-wrong condition is exactly
//    "pair sum outside the member's image", and implicit survivor elimination
//    always ends with at most 5 central candidates.
// ---------------------------------------------------------------------------
bool criterion_1(std::string& detail) {
    Check c;
    const int q = 12;
    hatg::planar::FullFamily family(q);
    hatg::Prng rng(20260815);

    for (int sample = 0; sample < 100 && c.ok; ++sample) {
        const std::vector<int> digits = family.random_member_digits(rng);
        const hatg::planar::PairFunction f = family.member(digits);
        const hatg::StructuredGuesser gx = hatg::planar::make_outer_guesser(q, 0, false, f);
        const hatg::StructuredGuesser gy = hatg::planar::make_outer_guesser(q, 0, true, f);
        for (int a = 0; a < q && c.ok; ++a) {
            for (int b = 0; b < q && c.ok; ++b) {
                const auto& image = f.at(a, b);
                for (int hx = 0; hx < q && c.ok; ++hx) {
                    for (int hy = 0; hy < q; ++hy) {
                        const std::vector<int> obs_x = {a, b, hy};
                        const std::vector<int> obs_y = {a, b, hx};
                        const bool both_wrong =
                            gx.fn(obs_x) != hx && gy.fn(obs_y) != hy;
                        const int sum = (hx + hy) % q;
                        const bool outside = sum != image.first && sum != image.second;
                        if (both_wrong != outside) {
                            c.expect(false, "member " + std::to_string(sample) +
                                                " both-wrong mismatch at (" +
                                                std::to_string(a) + "," + std::to_string(b) +
                                                "," + std::to_string(hx) + "," +
                                                std::to_string(hy) + ")");
                            break;
                        }
                    }
                }
            }
        }
    }

    std::size_t worst = 0;
    for (std::uint64_t trial = 0; trial < 100'000 && c.ok; ++trial) {
        const std::uint64_t trial_seed = hatg::derive_seed(417, trial);
        const auto sum_of_member = [&](const std::vector<int>& member_digits) {
            std::uint64_t h = trial_seed;
            for (const int d : member_digits) {
                h = hatg::splitmix64(h ^ static_cast<std::uint64_t>(d + 0x51));
            }
            return static_cast<int>(h % static_cast<std::uint64_t>(q));
        };
        const auto survivors = hatg::planar::surviving_central_bound(q, sum_of_member);
        worst = std::max(worst, survivors.size());
        c.expect(survivors.size() <= 5,
                 "trial " + std::to_string(trial) + " left " +
                     std::to_string(survivors.size()) + " survivors");
    }
    if (c.ok) {
        detail = "100 members x 12^4 colorings agree; 1e5 trials, worst survivor set " +
                 std::to_string(worst);
    } else {
        detail = c.why.str();
    }
    return c.ok;
}

// ---------------------------------------------------------------------------
// 2. Scaled end-to-end construction: q = 4 cover family exactly verified over
//    all 120 subsets, the assembled strategy survives 10^6 seeded colorings,
//    and the q = 2 variant is winning under exhaustive verification.
// ---------------------------------------------------------------------------
bool criterion_2(std::string& detail) {
    Check c;

    auto cover = hatg::planar::build_cover_family(4, 2, 99);
    auto exact = hatg::planar::verify_cover_family(cover);
    c.expect(exact.exact && exact.ok, "q=4 cover family failed exact verification");
    c.expect(exact.subsets_checked == 120,
             "expected 120 subsets, checked " + std::to_string(exact.subsets_checked));

    const int m4 = static_cast<int>(cover.members.size());
    const hatg::Graph graph4 = hatg::Graph::planar_construction(4, m4);
    const hatg::StrategyProfile strat4 = hatg::planar::construct_planar_strategy(4, cover);
    const auto sampled = hatg::verify_sampled(graph4, strat4, 1'000'000, 2026);
    c.expect(sampled.kind == hatg::VerifyOutcome::Kind::none_found &&
                 sampled.checked == 1'000'000,
             "q=4 strategy lost a sampled coloring");

    auto full2 = hatg::planar::build_full_family(2);
    const auto cover2 = hatg::planar::verify_cover_family(full2);
    c.expect(cover2.exact && cover2.ok, "q=2 full family failed cover verification");
    const int m2 = static_cast<int>(full2.members.size());
    const hatg::Graph graph2 = hatg::Graph::planar_construction(2, m2);
    const hatg::StrategyProfile strat2 = hatg::planar::construct_planar_strategy(2, full2);
    const auto outcome2 = hatg::verify_exhaustive(graph2, strat2);
    c.expect(outcome2.winning(), "q=2 strategy is not winning");

    if (c.ok) {
        detail = "cover(q=4): " + std::to_string(m4) + " members, 120 subsets; 1e6 samples clean; q=2 winning over " +
                 std::to_string(outcome2.checked) + " colorings";
    } else {
        detail = c.why.str();
    }
    return c.ok;
}

// ---------------------------------------------------------------------------
// 3. Thirteen colors always lose on the construction shape: the adversary
//    defeats 1000 seeded profiles across m in {0, 1, 5}, and the central
//    known set {0,1}x{0,1,2} is unhandleable by exhaustive reduced search.
// ---------------------------------------------------------------------------
bool criterion_3(std::string& detail) {
    Check c;
    const int q = 13;
    const int ms[3] = {0, 1, 5};
    hatg::Graph graphs[3] = {
        hatg::Graph::planar_construction(q, ms[0]),
        hatg::Graph::planar_construction(q, ms[1]),
        hatg::Graph::planar_construction(q, ms[2]),
    };

    for (int i = 0; i < 1000 && c.ok; ++i) {
        const int which = i % 3;
        const hatg::Graph& graph = graphs[which];
        std::vector<hatg::Guesser> guessers;
        for (int v = 0; v < graph.vertex_count(); ++v) {
            guessers.push_back(hatg::make_seeded_random_guesser(
                q, v, hatg::derive_seed(5150, static_cast<std::uint64_t>(i) * 64 + v)));
        }
        const hatg::StrategyProfile profile(q, std::move(guessers));
        const hatg::Coloring z = hatg::planar::adversary_13(graph, profile);
        const auto correct = hatg::evaluate(graph, profile, z);
        c.expect(correct.empty(), "profile " + std::to_string(i) +
                                      " (m=" + std::to_string(ms[which]) +
                                      ") had a correct guess");
    }

    std::vector<std::vector<int>> grid;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 3; ++b) {
            grid.push_back({a, b});
        }
    }
    const hatg::KnownSet central(2, q, grid);
    const auto outcome = hatg::handle_known_set(central);
    c.expect(!outcome.feasible(), "{0,1}x{0,1,2} was unexpectedly handleable");
    c.expect(outcome.certificate.has_value() &&
                 outcome.certificate->reduced_space == "432",
             "reduced search space was not 432");

    if (c.ok) {
        detail = "1000 profiles defeated, all evaluations empty; central 6-set infeasible over 432 cases";
    } else {
        detail = c.why.str();
    }
    return c.ok;
}

// ---------------------------------------------------------------------------
// 4. Clique handler: capacity matches the sum-of-i^i formula and 10^5 random
//    5-element known sets at d = 2 are all handleable, with every returned
//    strategy re-verified pointwise.
// ---------------------------------------------------------------------------
bool criterion_4(std::string& detail) {
    Check c;

    hatg::BigUint sum(0);
    for (std::uint64_t i = 1; i <= 2; ++i) sum = sum + hatg::BigUint::pow(i, i);
    c.expect(hatg::capacity(2) == sum && hatg::capacity(2) == hatg::BigUint(5),
             "capacity(2) != 5");
    sum = sum + hatg::BigUint::pow(3, 3);
    c.expect(hatg::capacity(3) == sum && hatg::capacity(3) == hatg::BigUint(32),
             "capacity(3) != 32");

    hatg::Prng rng(8842);
    for (int iter = 0; iter < 100'000 && c.ok; ++iter) {
        const int q = (iter % 2 == 0) ? 12 : 13;
        std::set<std::vector<int>> rows;
        while (rows.size() < 5) {
            rows.insert({rng.color(q), rng.color(q)});
        }
        const hatg::KnownSet ks(2, q,
                                std::vector<std::vector<int>>(rows.begin(), rows.end()));
        const auto outcome = hatg::handle_known_set(ks);
        if (!outcome.feasible()) {
            c.expect(false, "iteration " + std::to_string(iter) + " infeasible");
            break;
        }
        const auto& strat = *outcome.strategy;
        for (const auto& member : ks.set) {
            const bool covered = strat.guess(0, {member[1]}) == member[0] ||
                                 strat.guess(1, {member[0]}) == member[1];
            if (!covered) {
                c.expect(false, "iteration " + std::to_string(iter) +
                                    " strategy misses a member");
                break;
            }
        }
    }

    if (c.ok) {
        detail = "capacity anchors match; 1e5 random 5-sets handleable and pointwise correct";
    } else {
        detail = c.why.str();
    }
    return c.ok;
}

// ---------------------------------------------------------------------------
// 5. Book lemma: the d = 3 instantiation is (q=3, m=729, s=27), the union
//    bound chain holds numerically, and small onto families give winning
//    strategies on B_{2,m'} for m' in {1, 4}.
// ---------------------------------------------------------------------------
bool criterion_5(std::string& detail) {
    Check c;

    const auto params3 = hatg::book::lemma_parameters(3);
    c.expect(params3.d == 3 && params3.q == 3 && params3.m == 729 && params3.s == 27,
             "lemma_parameters(3) mismatch");

    const auto chain = hatg::book::union_bound_chain(3);
    long double direct = 3.0L;
    for (int i = 0; i < 27; ++i) direct *= 2.0L / 3.0L;
    c.expect(chain.holds, "union bound chain does not hold at d=3");
    c.expect(std::fabs(static_cast<double>(chain.value - direct)) < 1e-12,
             "chain value disagrees with direct recomputation");
    c.expect(direct < 0.5L, "3*(2/3)^27 is not below 1/2");

    std::uint64_t checked[2] = {0, 0};
    int idx = 0;
    for (const std::uint64_t m_prime : {1ULL, 4ULL}) {
        hatg::book::BookParameters params{2, 2, m_prime, 3};
        auto family = hatg::book::build_onto_family(params, 31 + m_prime);
        const hatg::StrategyProfile profile = hatg::book::construct_book_strategy(family);
        const hatg::Graph graph = hatg::Graph::book(2, static_cast<int>(m_prime));
        const auto outcome = hatg::verify_exhaustive(graph, profile);
        c.expect(outcome.winning(),
                 "B_{2," + std::to_string(m_prime) + "} strategy is not winning");
        checked[idx++] = outcome.checked;
    }

    if (c.ok) {
        detail = "parameters (3,729,27); chain value " +
                 std::to_string(static_cast<double>(chain.value)) +
                 " < 0.5; B_{2,1}/B_{2,4} winning over " + std::to_string(checked[0]) +
                 "/" + std::to_string(checked[1]) + " colorings";
    } else {
        detail = c.why.str();
    }
    return c.ok;
}

// ---------------------------------------------------------------------------
// 6. Spread families and the defeat of affine strategies.
// ---------------------------------------------------------------------------
bool criterion_6(std::string& detail) {
    Check c;

    const int grid[6][3] = {{1, 2, 3}, {2, 2, 3}, {1, 3, 3},
                            {1, 2, 5}, {2, 2, 5}, {1, 3, 5}};
    for (int i = 0; i < 200 && c.ok; ++i) {
        const auto& cell = grid[i % 6];
        const int n = cell[0], m = cell[1], p = cell[2];
        const auto strat =
            hatg::linear::random_linear_strategy(n, m, p, hatg::derive_seed(606, i));
        for (const auto kind : {hatg::linear::FamilyKind::F, hatg::linear::FamilyKind::G}) {
            const auto family = hatg::linear::implicit_family(kind, strat);
            if (!hatg::linear::spread_at_least_p_pow_inv_m(family, p, m)) {
                c.expect(false, "strategy " + std::to_string(i) +
                                    " spread below p^(1/m)");
                break;
            }
            const auto report = hatg::linear::spread_value(family);
            if (report.r_star < std::pow(static_cast<double>(p), 1.0 / m) - 1e-9) {
                c.expect(false, "strategy " + std::to_string(i) + " r_star too small");
                break;
            }
        }
    }

    for (int i = 0; i < 100 && c.ok; ++i) {
        const auto strat =
            hatg::linear::random_linear_strategy(2, 2, 7, hatg::derive_seed(707, i));
        const auto outcome = hatg::linear::defeat_linear(strat, hatg::derive_seed(808, i));
        if (!outcome.coloring.has_value()) {
            c.expect(false, "defeat " + std::to_string(i) + " found no coloring");
            break;
        }
        const hatg::Graph graph = hatg::linear::multipartite_graph(strat);
        const auto profile = hatg::linear::to_profile(strat);
        c.expect(hatg::evaluate(graph, profile, *outcome.coloring).empty(),
                 "defeat " + std::to_string(i) + " left a correct guess");

        // Independent oracle: every all-wrong coloring by direct affine
        // arithmetic, no evaluator involved.
        bool in_oracle_set = false;
        std::vector<int> values(4, 0);
        for (int code = 0; code < 7 * 7 * 7 * 7; ++code) {
            int rem = code;
            for (int v = 0; v < 4; ++v) {
                values[static_cast<std::size_t>(v)] = rem % 7;
                rem /= 7;
            }
            bool all_wrong = true;
            for (int v = 0; v < 4 && all_wrong; ++v) {
                int acc = strat.bias[static_cast<std::size_t>(v)];
                int pos = 0;
                for (int u = 0; u < 4; ++u) {
                    if (u % 2 == v % 2) continue;
                    acc += strat.coeffs[static_cast<std::size_t>(v)]
                                       [static_cast<std::size_t>(pos++)] *
                           values[static_cast<std::size_t>(u)];
                }
                if (acc % 7 == values[static_cast<std::size_t>(v)]) all_wrong = false;
            }
            if (all_wrong && values == outcome.coloring->values) {
                in_oracle_set = true;
                break;
            }
        }
        c.expect(in_oracle_set,
                 "defeat " + std::to_string(i) + " not in the oracle defeating set");
    }

    const hatg::linear::LinearStrategy winning(1, 2, 2, {{1}, {1}}, {0, 1});
    c.expect(!hatg::linear::brute_force_defeat(winning).has_value(),
             "brute force defeated the winning K_2 profile");

    if (c.ok) {
        detail = "200 spread bounds exact; 100 defeats all-wrong and oracle-confirmed; winning K_2 undefeated";
    } else {
        detail = c.why.str();
    }
    return c.ok;
}

// ---------------------------------------------------------------------------
// 7. Random graph experiment: target depth matches exact big-integer
//    arithmetic, harvested common neighborhoods track (n-d)/2^d, and the
//    report is byte-for-byte reproducible.
// ---------------------------------------------------------------------------
bool criterion_7(std::string& detail) {
    Check c;

    const auto depth_fits = [](int d, std::uint64_t n) {
        const hatg::BigUint lhs =
            hatg::BigUint::pow(static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(d + 3)) *
            hatg::BigUint::pow(2, static_cast<std::uint64_t>(d + 1));
        return !(hatg::BigUint(n) < lhs);
    };
    for (const std::uint64_t n : {64ULL, 1ULL << 20}) {
        int direct = 0;
        for (int d = 1; depth_fits(d, n); ++d) direct = d;
        c.expect(hatg::randgraph::target_d(n) == direct,
                 "target_d(" + std::to_string(n) + ") disagrees with direct evaluation");
    }

    const int n = 4096;
    const int d = hatg::randgraph::target_d(n);
    c.expect(d == 2, "target_d(4096) != 2");
    double total = 0;
    for (int s = 0; s < 20 && c.ok; ++s) {
        const auto sample =
            hatg::randgraph::sample_gnp(n, hatg::derive_seed(4096, s));
        const auto book = hatg::randgraph::find_book(sample, d);
        if (!book.has_value()) {
            c.expect(false, "seed " + std::to_string(s) + " found no 2-clique");
            break;
        }
        total += static_cast<double>(book->commons.size());
    }
    const double avg = total / 20.0;
    const double expected = static_cast<double>(n - d) / std::pow(2.0, d);
    c.expect(avg >= 0.8 * expected && avg <= 1.2 * expected,
             "average commons " + std::to_string(avg) + " outside [0.8,1.2] x " +
                 std::to_string(expected));

    const auto render = [](const hatg::randgraph::LowerBoundReport& r) {
        const nlohmann::json j = {
            {"n", r.n},
            {"seed", r.seed},
            {"found", r.found},
            {"d", r.d},
            {"m_found", r.m_found},
            {"q_certified", r.q_certified},
            {"end_to_end_verified", r.end_to_end_verified},
            {"wall_ms", 0},
        };
        return hatg::json::dump_report(j);
    };
    const auto sample_a = hatg::randgraph::sample_gnp(256, 77);
    const auto sample_b = hatg::randgraph::sample_gnp(256, 77);
    const std::string report_a = render(hatg::randgraph::certified_lower_bound(sample_a));
    const std::string report_b = render(hatg::randgraph::certified_lower_bound(sample_b));
    c.expect(report_a == report_b, "reports differ between identical runs");

    if (c.ok) {
        detail = "target_d exact at 64 and 2^20; avg commons " + std::to_string(avg) +
                 " vs expected " + std::to_string(expected) + "; report reproducible";
    } else {
        detail = c.why.str();
    }
    return c.ok;
}

// ---------------------------------------------------------------------------
// 8. Exact solver anchors, cross-checked by the verifier on witnesses and by
//    an independent enumeration of every reduced table profile.
// ---------------------------------------------------------------------------
namespace adversary {

// Enumerates every table profile (entries in {abstain} + colors) and every
// coloring, sharing no code with the solver.
bool winnable_by_enumeration(const hatg::Graph& graph, int q) {
    const int n = graph.vertex_count();
    std::vector<std::uint64_t> table_sizes;
    std::uint64_t total_slots = 0;
    for (int v = 0; v < n; ++v) {
        std::uint64_t size = 1;
        for (int i = 0; i < graph.degree(v); ++i) size *= static_cast<std::uint64_t>(q);
        table_sizes.push_back(size);
        total_slots += size;
    }

    std::vector<int> entries(total_slots, hatg::kAbstain);
    const auto guess_of = [&](int v, const std::vector<int>& values) {
        std::uint64_t offset = 0;
        for (int u = 0; u < v; ++u) offset += table_sizes[static_cast<std::size_t>(u)];
        std::uint64_t idx = 0;
        for (const int u : graph.neighbors(v)) {
            idx = idx * static_cast<std::uint64_t>(q) +
                  static_cast<std::uint64_t>(values[static_cast<std::size_t>(u)]);
        }
        return entries[offset + idx];
    };

    std::uint64_t colorings = 1;
    for (int v = 0; v < n; ++v) colorings *= static_cast<std::uint64_t>(q);

    for (;;) {
        bool wins = true;
        for (std::uint64_t code = 0; code < colorings && wins; ++code) {
            std::vector<int> values(static_cast<std::size_t>(n));
            std::uint64_t rem = code;
            for (int v = 0; v < n; ++v) {
                values[static_cast<std::size_t>(v)] = static_cast<int>(
                    rem % static_cast<std::uint64_t>(q));
                rem /= static_cast<std::uint64_t>(q);
            }
            bool correct = false;
            for (int v = 0; v < n && !correct; ++v) {
                correct = guess_of(v, values) == values[static_cast<std::size_t>(v)];
            }
            wins = correct;
        }
        if (wins) return true;

        // Odometer over entries: abstain -> 0 -> ... -> q-1 -> carry.
        std::size_t pos = 0;
        while (pos < entries.size()) {
            if (entries[pos] + 1 < q) {
                ++entries[pos];
                break;
            }
            entries[pos] = hatg::kAbstain;
            ++pos;
        }
        if (pos == entries.size()) return false;
    }
}

// Replays a table-only witness against every coloring by direct indexing,
// bypassing the evaluator.
bool witness_beats_all_colorings(const hatg::Graph& graph,
                                 const hatg::StrategyProfile& profile, int q) {
    const int n = graph.vertex_count();
    std::uint64_t colorings = 1;
    for (int v = 0; v < n; ++v) colorings *= static_cast<std::uint64_t>(q);
    for (std::uint64_t code = 0; code < colorings; ++code) {
        std::vector<int> values(static_cast<std::size_t>(n));
        std::uint64_t rem = code;
        for (int v = 0; v < n; ++v) {
            values[static_cast<std::size_t>(v)] =
                static_cast<int>(rem % static_cast<std::uint64_t>(q));
            rem /= static_cast<std::uint64_t>(q);
        }
        bool correct = false;
        for (int v = 0; v < n && !correct; ++v) {
            const auto& table = std::get<hatg::TableGuesser>(profile.guesser(v));
            std::uint64_t idx = 0;
            for (const int u : graph.neighbors(v)) {
                idx = idx * static_cast<std::uint64_t>(q) +
                      static_cast<std::uint64_t>(values[static_cast<std::size_t>(u)]);
            }
            correct = table.guesses[idx] == values[static_cast<std::size_t>(v)];
        }
        if (!correct) return false;
    }
    return true;
}

} // namespace adversary

bool criterion_8(std::string& detail) {
    Check c;

    const struct {
        int n;
        int q;
        bool winnable;
    } anchors[] = {
        {1, 1, true}, {1, 2, false}, {2, 2, true}, {2, 3, false}, {3, 3, true},
    };

    for (const auto& a : anchors) {
        const hatg::Graph graph = hatg::Graph::complete(a.n);
        const auto result = hatg::solve_hg(graph, a.q);
        if (result.winnable != a.winnable) {
            c.expect(false, "K_" + std::to_string(a.n) + " q=" + std::to_string(a.q) +
                                " solver verdict wrong");
            continue;
        }
        if (a.winnable) {
            c.expect(result.witness.has_value(), "winnable without witness");
            const auto outcome = hatg::verify_exhaustive(graph, *result.witness);
            c.expect(outcome.winning(), "witness fails verification on K_" +
                                            std::to_string(a.n));
            c.expect(adversary::witness_beats_all_colorings(graph, *result.witness, a.q),
                     "direct replay found an all-wrong coloring on K_" +
                         std::to_string(a.n));
        }
        // The independent adversary enumerates the full reduced strategy
        // space only where that is small; for K_3 at q=3 it confirms the
        // witness instead, coloring by coloring.
        if (!a.winnable || (a.n <= 2 && a.q <= 3)) {
            c.expect(adversary::winnable_by_enumeration(graph, a.q) == a.winnable,
                     "independent enumeration disagrees on K_" + std::to_string(a.n) +
                         " q=" + std::to_string(a.q));
        }
    }

    if (c.ok) {
        detail = "K_1, K_2, K_3 verdicts verified and confirmed by independent enumeration";
    } else {
        detail = c.why.str();
    }
    return c.ok;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        bool (*run)(std::string&);
    };
    const Criterion criteria[] = {
        {"1 planar mechanics at q=12", &criterion_1},
        {"2 planar end-to-end at q=4 and q=2", &criterion_2},
        {"3 thirteen colors defeated", &criterion_3},
        {"4 clique handler capacity and 5-sets", &criterion_4},
        {"5 book lemma parameters and small wins", &criterion_5},
        {"6 spread values and affine defeats", &criterion_6},
        {"7 random graph experiment", &criterion_7},
        {"8 exact solver anchors", &criterion_8},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::cout << "criterion " << criterion.name << ": " << (ok ? "PASS" : "FAIL")
                  << " (" << detail << ")" << std::endl;
    }
    return failures;
}
