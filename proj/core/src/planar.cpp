#include "hatg/planar.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include <nlohmann/json.hpp>

#include "hatg/clique_handler.hpp"
#include "hatg/errors.hpp"
#include "hatg/numeric.hpp"

namespace hatg::planar {

int pair_count(int q) { return q * (q - 1) / 2; }

int colex_index(int g1, int g2) {
    if (g1 > g2) std::swap(g1, g2);
    if (g1 < 0 || g1 == g2) throw InvalidInputError("not an unordered pair of distinct colors");
    return g2 * (g2 - 1) / 2 + g1;
}

std::pair<int, int> colex_pair(int index) {
    if (index < 0) throw InvalidInputError("negative pair rank");
    int g2 = 1;
    while ((g2 + 1) * g2 / 2 <= index) ++g2;
    return {index - g2 * (g2 - 1) / 2, g2};
}

const std::pair<int, int>& PairFunction::at(int a, int b) const {
    if (a < 0 || b < 0 || a >= q || b >= q) throw InvalidInputError("pair-function input out of range");
    return table[static_cast<std::size_t>(a * q + b)];
}

PairFunction function_from_digits(int q, const std::vector<int>& digits) {
    const int pc = pair_count(q);
    if (static_cast<int>(digits.size()) != q * q) {
        throw InvalidInputError("pair function needs q^2 digits");
    }
    PairFunction f;
    f.q = q;
    f.table.reserve(digits.size());
    for (const int d : digits) {
        if (d < 0 || d >= pc) throw InvalidInputError("pair digit out of range");
        f.table.push_back(colex_pair(d));
    }
    return f;
}

FullFamily::FullFamily(int q) : q_(q) {
    if (q < 2 || q % 2 != 0) {
        throw InvalidInputError("the construction needs an even q >= 2");
    }
}

BigUint FullFamily::member_count() const {
    return BigUint::pow(static_cast<std::uint64_t>(pair_count(q_)),
                        static_cast<unsigned>(q_ * q_));
}

PairFunction FullFamily::member(const std::vector<int>& digits) const {
    return function_from_digits(q_, digits);
}

std::vector<int> FullFamily::random_member_digits(Prng& rng) const {
    const int pc = pair_count(q_);
    std::vector<int> digits(static_cast<std::size_t>(q_ * q_));
    for (auto& d : digits) d = static_cast<int>(rng.below(static_cast<std::uint64_t>(pc)));
    return digits;
}

std::vector<int> FullFamily::partition_member_digits(const std::vector<int>& inputs) const {
    if (static_cast<int>(inputs.size()) != q_ / 2) {
        throw InvalidInputError("partition member needs exactly q/2 inputs");
    }
    std::vector<int> digits(static_cast<std::size_t>(q_ * q_), 0);
    std::vector<bool> seen(digits.size(), false);
    for (std::size_t j = 0; j < inputs.size(); ++j) {
        const int input = inputs[j];
        if (input < 0 || input >= q_ * q_ || seen[static_cast<std::size_t>(input)]) {
            throw InvalidInputError("partition inputs must be distinct and in range");
        }
        seen[static_cast<std::size_t>(input)] = true;
        digits[static_cast<std::size_t>(input)] =
            colex_index(2 * static_cast<int>(j), 2 * static_cast<int>(j) + 1);
    }
    return digits;
}

namespace {

// True iff the member maps the given inputs to pairwise-disjoint pairs whose
// union is [0,q).  The subset size is q/2, so disjointness and full coverage
// coincide with the accumulated mask being complete.
bool covers_subset(const PairFunction& f, const std::vector<int>& inputs) {
    std::uint32_t mask = 0;
    for (const int input : inputs) {
        const auto& [g1, g2] = f.table[static_cast<std::size_t>(input)];
        const std::uint32_t bits = (1u << g1) | (1u << g2);
        if ((mask & bits) != 0) return false;
        mask |= bits;
    }
    return mask == (1u << f.q) - 1;
}

bool family_covers(const std::vector<PairFunction>& members, const std::vector<int>& inputs) {
    for (const auto& f : members) {
        if (covers_subset(f, inputs)) return true;
    }
    return false;
}

// Lexicographic combination odometer over k-subsets of [0, n).
bool next_combination(std::vector<int>& comb, int n) {
    const int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[static_cast<std::size_t>(i)] < n - k + i) {
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) {
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
            }
            return true;
        }
    }
    return false;
}

std::vector<int> sample_subset(Prng& rng, int n, int k) {
    std::vector<int> inputs;
    inputs.reserve(static_cast<std::size_t>(k));
    while (static_cast<int>(inputs.size()) < k) {
        const int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (std::find(inputs.begin(), inputs.end(), c) == inputs.end()) inputs.push_back(c);
    }
    std::sort(inputs.begin(), inputs.end());
    return inputs;
}

void require_even_q(int q) {
    if (q < 2 || q % 2 != 0) throw InvalidInputError("the construction needs an even q >= 2");
}

} // namespace

PairFunctionFamily build_full_family(int q, std::uint64_t budget) {
    require_even_q(q);
    FullFamily ff(q);
    const BigUint count = ff.member_count();
    if (!count.fits_u64() || count.to_u64() > budget) {
        throw BudgetError("the full family has " + count.to_string() +
                              " members, over the materialization budget of " +
                              std::to_string(budget),
                          count.to_string());
    }
    PairFunctionFamily family;
    family.q = q;
    family.t = q / 2;
    const int pc = pair_count(q);
    std::vector<int> digits(static_cast<std::size_t>(q * q), 0);
    for (;;) {
        family.members.push_back(ff.member(digits));
        std::size_t pos = digits.size();
        while (pos-- > 0) {
            if (++digits[pos] < pc) break;
            digits[pos] = 0;
        }
        if (pos == static_cast<std::size_t>(-1)) break;
    }
    verify_cover_family(family, budget);
    return family;
}

PairFunctionFamily build_cover_family(int q, int t, std::uint64_t seed, std::uint64_t budget) {
    require_even_q(q);
    if (t != q / 2) throw InvalidInputError("covering parameter must be q/2");
    const int n_inputs = q * q;
    const BigUint subset_count = big_binomial(static_cast<unsigned>(n_inputs),
                                              static_cast<unsigned>(t));
    if (!subset_count.fits_u64() || subset_count.to_u64() > budget) {
        throw BudgetError("cover construction needs " + subset_count.to_string() +
                              " subset checks, over the budget of " + std::to_string(budget),
                          subset_count.to_string());
    }

    std::vector<std::vector<int>> subsets;
    std::vector<int> comb(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) comb[static_cast<std::size_t>(i)] = i;
    do {
        subsets.push_back(comb);
    } while (next_combination(comb, n_inputs));

    PairFunctionFamily family;
    family.q = q;
    family.t = t;
    std::vector<bool> covered(subsets.size(), false);
    std::size_t remaining = subsets.size();
    FullFamily ff(q);
    Prng rng(seed);
    int misses = 0;
    constexpr int kMissCap = 200;
    while (remaining > 0) {
        PairFunction candidate;
        if (misses < kMissCap) {
            candidate = ff.member(ff.random_member_digits(rng));
        } else {
            // Random generation has stalled; construct a member for the first
            // uncovered subset directly.
            std::size_t first = 0;
            while (covered[first]) ++first;
            candidate = ff.member(ff.partition_member_digits(subsets[first]));
        }
        std::size_t newly = 0;
        for (std::size_t s = 0; s < subsets.size(); ++s) {
            if (!covered[s] && covers_subset(candidate, subsets[s])) {
                covered[s] = true;
                ++newly;
            }
        }
        if (newly > 0) {
            family.members.push_back(std::move(candidate));
            remaining -= newly;
            misses = 0;
        } else {
            ++misses;
        }
    }

    const CoverCheck check = verify_cover_family(family, budget);
    if (!check.ok) throw ContractError("cover construction produced an unverified family");
    return family;
}

CoverCheck verify_cover_family(PairFunctionFamily& family, std::uint64_t budget) {
    require_even_q(family.q);
    const int n_inputs = family.q * family.q;
    const BigUint subset_count = big_binomial(static_cast<unsigned>(n_inputs),
                                              static_cast<unsigned>(family.t));
    if (!subset_count.fits_u64() || subset_count.to_u64() > budget) {
        throw BudgetError("exact cover verification needs " + subset_count.to_string() +
                              " subset checks, over the budget of " + std::to_string(budget),
                          subset_count.to_string());
    }
    CoverCheck check;
    check.exact = true;
    std::vector<int> comb(static_cast<std::size_t>(family.t));
    for (int i = 0; i < family.t; ++i) comb[static_cast<std::size_t>(i)] = i;
    do {
        ++check.subsets_checked;
        if (!family_covers(family.members, comb)) {
            check.ok = false;
            check.violating_subset = comb;
            return check;
        }
    } while (next_combination(comb, n_inputs));
    check.ok = true;
    family.cover_verified = true;
    return check;
}

CoverCheck verify_cover_family_sampled(const PairFunctionFamily& family, std::uint64_t samples,
                                       std::uint64_t seed) {
    require_even_q(family.q);
    CoverCheck check;
    check.exact = false;
    for (std::uint64_t i = 0; i < samples; ++i) {
        Prng rng(derive_seed(seed, i));
        const auto inputs = sample_subset(rng, family.q * family.q, family.t);
        ++check.subsets_checked;
        if (!family_covers(family.members, inputs)) {
            check.ok = false;
            check.violating_subset = inputs;
            return check;
        }
    }
    check.ok = true;
    return check;
}

namespace {

CoverCheck full_cover_scan(int q, std::uint64_t samples_or_zero, std::uint64_t seed,
                           std::uint64_t budget) {
    FullFamily ff(q);
    const int t = q / 2;
    CoverCheck check;
    if (samples_or_zero == 0) {
        const BigUint subset_count =
            big_binomial(static_cast<unsigned>(q * q), static_cast<unsigned>(t));
        if (!subset_count.fits_u64() || subset_count.to_u64() > budget) {
            throw BudgetError("exact full-family cover verification needs " +
                                  subset_count.to_string() + " subset checks",
                              subset_count.to_string());
        }
        check.exact = true;
        std::vector<int> comb(static_cast<std::size_t>(t));
        for (int i = 0; i < t; ++i) comb[static_cast<std::size_t>(i)] = i;
        do {
            ++check.subsets_checked;
            const PairFunction f = ff.member(ff.partition_member_digits(comb));
            if (!covers_subset(f, comb)) {
                check.ok = false;
                check.violating_subset = comb;
                return check;
            }
        } while (next_combination(comb, q * q));
        check.ok = true;
        return check;
    }
    check.exact = false;
    for (std::uint64_t i = 0; i < samples_or_zero; ++i) {
        Prng rng(derive_seed(seed, i));
        const auto inputs = sample_subset(rng, q * q, t);
        ++check.subsets_checked;
        const PairFunction f = ff.member(ff.partition_member_digits(inputs));
        if (!covers_subset(f, inputs)) {
            check.ok = false;
            check.violating_subset = inputs;
            return check;
        }
    }
    check.ok = true;
    return check;
}

} // namespace

CoverCheck verify_full_cover_sampled(int q, std::uint64_t samples, std::uint64_t seed) {
    if (samples == 0) throw InvalidInputError("sampled verification needs at least one sample");
    return full_cover_scan(q, samples, seed, 0);
}

CoverCheck verify_full_cover_exact(int q, std::uint64_t budget) {
    return full_cover_scan(q, 0, 0, budget);
}

std::vector<std::pair<int, int>> surviving_central_colorings(const PairFunctionFamily& family,
                                                             const std::vector<int>& outer_sums) {
    if (outer_sums.size() != family.members.size()) {
        throw InvalidInputError("one pair sum per family member is required");
    }
    const int q = family.q;
    for (const int s : outer_sums) {
        if (s < 0 || s >= q) throw InvalidInputError("pair sum out of range");
    }
    std::vector<std::pair<int, int>> survivors;
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            bool alive = true;
            for (std::size_t i = 0; i < family.members.size(); ++i) {
                const auto& [g1, g2] = family.members[i].at(a, b);
                const int s = outer_sums[i];
                if (s == g1 || s == g2) {
                    alive = false;
                    break;
                }
            }
            if (alive) survivors.emplace_back(a, b);
        }
    }
    return survivors;
}

std::vector<std::pair<int, int>> surviving_central_bound(
    int q, const std::function<int(const std::vector<int>&)>& sum_of_member) {
    require_even_q(q);
    FullFamily ff(q);
    const int t = q / 2;
    std::vector<std::pair<int, int>> candidates;
    candidates.reserve(static_cast<std::size_t>(q * q));
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) candidates.emplace_back(a, b);
    }
    while (static_cast<int>(candidates.size()) >= t) {
        std::vector<int> inputs;
        inputs.reserve(static_cast<std::size_t>(t));
        for (int j = 0; j < t; ++j) {
            inputs.push_back(candidates[static_cast<std::size_t>(j)].first * q +
                             candidates[static_cast<std::size_t>(j)].second);
        }
        const std::vector<int> digits = ff.partition_member_digits(inputs);
        const int s = sum_of_member(digits);
        if (s < 0 || s >= q) throw InvalidInputError("sum oracle returned an out-of-range value");
        // The images {2j, 2j+1} partition [0,q), so the sum lands in exactly
        // one image and kills exactly that candidate.
        candidates.erase(candidates.begin() + s / 2);
    }
    return candidates;
}

StructuredGuesser make_outer_guesser(int q, int pair_index, bool second_member, PairFunction f) {
    if (f.q != q) throw InvalidInputError("pair function q differs from strategy q");
    nlohmann::json table = nlohmann::json::array();
    for (const auto& [g1, g2] : f.table) table.push_back({g1, g2});
    StructuredGuesser g;
    g.meta = {{"role", "planar-outer"},
              {"q", q},
              {"pair_index", pair_index},
              {"which", second_member ? "y" : "x"},
              {"table", std::move(table)}};
    g.fn = [q, second_member, f = std::move(f)](std::span<const int> obs) -> int {
        const auto& pr = f.at(obs[0], obs[1]);
        const int g_out = second_member ? pr.second : pr.first;
        return ((g_out - obs[2]) % q + q) % q;
    };
    return g;
}

namespace {

struct CentralCache {
    std::mutex mu;
    std::map<std::vector<int>, CliqueStrategy> handlers;
};

} // namespace

StructuredGuesser make_central_guesser(int q, int which,
                                       std::shared_ptr<const std::vector<PairFunction>> members) {
    if (which != 0 && which != 1) throw InvalidInputError("central vertex index must be 0 or 1");
    nlohmann::json tables = nlohmann::json::array();
    for (const auto& f : *members) {
        nlohmann::json table = nlohmann::json::array();
        for (const auto& [g1, g2] : f.table) table.push_back({g1, g2});
        tables.push_back(std::move(table));
    }
    StructuredGuesser g;
    g.meta = {{"role", "planar-central"}, {"q", q}, {"which", which}, {"members", std::move(tables)}};
    auto cache = std::make_shared<CentralCache>();
    g.fn = [q, which, members = std::move(members), cache](std::span<const int> obs) -> int {
        const int partner = obs[0];
        const std::size_t m = (obs.size() - 1) / 2;
        std::vector<int> sums(m);
        for (std::size_t i = 0; i < m; ++i) {
            sums[i] = (obs[1 + 2 * i] + obs[2 + 2 * i]) % q;
        }
        {
            std::lock_guard lock(cache->mu);
            const auto it = cache->handlers.find(sums);
            if (it != cache->handlers.end()) {
                return it->second.guess(which, {partner});
            }
        }
        std::vector<std::vector<int>> survivors;
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                bool alive = true;
                for (std::size_t i = 0; i < m; ++i) {
                    const auto& [g1, g2] = (*members)[i].at(a, b);
                    if (sums[i] == g1 || sums[i] == g2) {
                        alive = false;
                        break;
                    }
                }
                if (alive) survivors.push_back({a, b});
            }
        }
        HandleOutcome handled = handle_known_set(KnownSet(2, q, std::move(survivors)));
        if (!handled.feasible()) {
            throw ContractError("central pair cannot handle a survivor set");
        }
        const int out = handled.strategy->guess(which, {partner});
        std::lock_guard lock(cache->mu);
        cache->handlers.emplace(std::move(sums), std::move(*handled.strategy));
        return out;
    };
    return g;
}

StrategyProfile construct_planar_strategy(int q, const PairFunctionFamily& family) {
    require_even_q(q);
    if (family.q != q) throw InvalidInputError("family q differs from requested q");
    if (family.t != q / 2) throw InvalidInputError("family covering parameter must be q/2");
    if (family.members.empty()) throw InvalidInputError("family needs at least one member");
    if (!family.cover_verified) {
        throw InvalidInputError("family must pass exact cover verification first");
    }
    if (q > 12) {
        throw ContractError("survivor bound q/2 - 1 exceeds what the central pair can handle");
    }

    auto members = std::make_shared<const std::vector<PairFunction>>(family.members);
    std::vector<Guesser> guessers;
    guessers.reserve(2 + 2 * family.members.size());
    guessers.emplace_back(make_central_guesser(q, 0, members));
    guessers.emplace_back(make_central_guesser(q, 1, members));
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        guessers.emplace_back(
            make_outer_guesser(q, static_cast<int>(i), false, family.members[i]));
        guessers.emplace_back(
            make_outer_guesser(q, static_cast<int>(i), true, family.members[i]));
    }
    return StrategyProfile(q, std::move(guessers));
}

Coloring adversary_13(const Graph& graph, const StrategyProfile& profile) {
    const auto& shape = graph.shape();
    const auto* ps = shape ? std::get_if<PlanarConstructionShape>(&*shape) : nullptr;
    if (ps == nullptr) throw InvalidInputError("adversary needs a construction-shaped graph");
    if (profile.q() != 13 || ps->q != 13) {
        throw InvalidInputError("the adversary argument is specific to q = 13");
    }
    Evaluator ev(graph, profile); // validates the profile against the graph

    static const std::vector<std::pair<int, int>> kCentral = {{0, 0}, {0, 1}, {0, 2},
                                                              {1, 0}, {1, 1}, {1, 2}};
    const int q = 13;
    const int m = ps->m;
    std::vector<int> values(static_cast<std::size_t>(graph.vertex_count()), 0);

    // Per outer pair: the first of its 169 colorings where both members guess
    // wrong under every central candidate.  At most 6*(13+13) = 156 colorings
    // can have a correct guess under some candidate, so one of 169 survives.
    std::vector<int> obs3(3);
    for (int i = 0; i < m; ++i) {
        const int x = 2 + 2 * i;
        const int y = 3 + 2 * i;
        bool placed = false;
        for (int cx = 0; cx < q && !placed; ++cx) {
            for (int cy = 0; cy < q && !placed; ++cy) {
                bool all_wrong = true;
                for (const auto& [a, b] : kCentral) {
                    obs3[0] = a;
                    obs3[1] = b;
                    obs3[2] = cy;
                    if (profile.guess(x, obs3) == cx) {
                        all_wrong = false;
                        break;
                    }
                    obs3[2] = cx;
                    if (profile.guess(y, obs3) == cy) {
                        all_wrong = false;
                        break;
                    }
                }
                if (all_wrong) {
                    values[static_cast<std::size_t>(x)] = cx;
                    values[static_cast<std::size_t>(y)] = cy;
                    placed = true;
                }
            }
        }
        if (!placed) {
            throw ContractError("no all-wrong outer coloring exists; the counting bound failed");
        }
    }

    // Central scan: u's guess depends only on b (and the fixed outer hats),
    // v's only on a, so at most 3 + 2 = 5 of the 6 candidates see a correct
    // central guess.
    std::vector<int> obs_u, obs_v;
    obs_u.reserve(static_cast<std::size_t>(1 + 2 * m));
    obs_v.reserve(static_cast<std::size_t>(1 + 2 * m));
    for (const auto& [a, b] : kCentral) {
        obs_u.assign(1, b);
        obs_v.assign(1, a);
        for (int w = 2; w < graph.vertex_count(); ++w) {
            obs_u.push_back(values[static_cast<std::size_t>(w)]);
            obs_v.push_back(values[static_cast<std::size_t>(w)]);
        }
        if (profile.guess(0, obs_u) == a) continue;
        if (profile.guess(1, obs_v) == b) continue;
        values[0] = a;
        values[1] = b;
        if (ev.any_correct(values)) {
            throw ContractError("adversary coloring admits a correct guess");
        }
        return Coloring(q, std::move(values));
    }
    throw ContractError("no all-wrong central candidate exists; the pigeonhole bound failed");
}

bool euler_bound_ok(const Graph& graph) {
    const int v = graph.vertex_count();
    if (v < 3) return true;
    return graph.edge_count() <= static_cast<std::size_t>(3 * v - 6);
}

int rotation_face_count(int m) {
    if (m < 0) throw InvalidInputError("negative outer pair count");
    const int n = 2 + 2 * m;
    std::vector<std::vector<int>> rot(static_cast<std::size_t>(n));
    rot[0].push_back(1);
    for (int i = 0; i < m; ++i) {
        rot[0].push_back(3 + 2 * i);
        rot[0].push_back(2 + 2 * i);
    }
    for (int i = m - 1; i >= 0; --i) {
        rot[1].push_back(2 + 2 * i);
        rot[1].push_back(3 + 2 * i);
    }
    rot[1].push_back(0);
    for (int i = 0; i < m; ++i) {
        rot[static_cast<std::size_t>(2 + 2 * i)] = {0, 3 + 2 * i, 1};
        rot[static_cast<std::size_t>(3 + 2 * i)] = {2 + 2 * i, 0, 1};
    }

    std::map<std::pair<int, int>, int> pos;
    for (int v = 0; v < n; ++v) {
        for (std::size_t j = 0; j < rot[static_cast<std::size_t>(v)].size(); ++j) {
            pos[{v, rot[static_cast<std::size_t>(v)][j]}] = static_cast<int>(j);
        }
    }
    std::map<std::pair<int, int>, bool> used;
    for (const auto& [key, p] : pos) used[key] = false;

    int faces = 0;
    for (auto& [start, flag] : used) {
        if (flag) continue;
        ++faces;
        std::pair<int, int> cur = start;
        while (!used[cur]) {
            used[cur] = true;
            const auto& [a, b] = cur;
            const auto& ring = rot[static_cast<std::size_t>(b)];
            const int deg = static_cast<int>(ring.size());
            const int p = pos[{b, a}];
            cur = {b, ring[static_cast<std::size_t>((p + deg - 1) % deg)]};
        }
    }
    return faces;
}

} // namespace hatg::planar
