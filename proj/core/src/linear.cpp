#include "hatg/linear.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "hatg/biguint.hpp"
#include "hatg/errors.hpp"
#include "hatg/numeric.hpp"
#include "hatg/rng.hpp"

namespace hatg::linear {

namespace {

std::uint64_t coloring_count(const LinearStrategy& s) {
    const auto count = checked_pow_u64(static_cast<std::uint64_t>(s.p),
                                       static_cast<std::uint64_t>(s.vertex_count()));
    if (!count) throw BudgetError("p^(nm) does not fit 64 bits");
    return *count;
}

const ImplicitFamily& require_implicit(const SpreadFamily& family) {
    const auto* imp = std::get_if<ImplicitFamily>(&family.rep);
    if (!imp) throw InvalidInputError("operation needs an implicit family");
    return *imp;
}

bool next_coloring(std::vector<int>& x, int p) {
    for (std::size_t pos = x.size(); pos-- > 0;) {
        if (++x[pos] < p) return true;
        x[pos] = 0;
    }
    return false;
}

// Shared subset census: every nonempty Z with at least one containing member,
// keyed by ascending ground indices.
std::map<std::vector<int>, std::uint64_t> subset_counts(const SpreadFamily& family,
                                                        std::uint64_t budget) {
    const MaterializedFamily* mat = std::get_if<MaterializedFamily>(&family.rep);
    SpreadFamily storage;
    if (!mat) {
        storage = materialize_all(family, budget);
        mat = &std::get<MaterializedFamily>(storage.rep);
    }
    if (mat->members.empty()) throw InvalidInputError("spread of an empty family");
    const std::size_t w = mat->members.front().size();
    if (w > 20) throw BudgetError("member size too large for subset enumeration");
    const unsigned __int128 cost =
        static_cast<unsigned __int128>(mat->members.size()) << w;
    if (cost > budget) {
        throw BudgetError("subset enumeration over budget",
                          (BigUint{mat->members.size()} * BigUint{std::uint64_t{1} << w})
                              .to_string());
    }
    std::map<std::vector<int>, std::uint64_t> counts;
    std::vector<int> z;
    for (const auto& member : mat->members) {
        if (member.size() != w) throw InvalidInputError("ragged family member sizes");
        for (std::uint32_t mask = 1; mask < (1u << w); ++mask) {
            z.clear();
            for (std::size_t i = 0; i < w; ++i) {
                if (mask & (1u << i)) z.push_back(member[i]);
            }
            ++counts[z];
        }
    }
    return counts;
}

// Incremental constraint tracker for the backtracking search.  Constraint s
// requires x_s - f_s(x) (- b_s) to land in the allowed value set of slot s;
// it becomes checkable once slot s and every visible slot are assigned.
struct SlotSearch {
    const LinearStrategy& strategy;
    const GroundSet& ground;
    const std::vector<char>& allowed;
    bool with_bias;

    int nm;
    std::vector<std::vector<int>> coeff_of; // coeff_of[s][t], 0 when t invisible to s
    std::vector<int> order;                 // vertex ids in (k,i) slot order
    std::vector<int> acc;                   // partial x_s - f_s(x) (- b_s), mod p
    std::vector<int> remaining;             // unassigned dependencies of constraint s
    std::vector<int> x;

    SlotSearch(const LinearStrategy& strat, const GroundSet& g,
               const std::vector<char>& allow, bool bias)
        : strategy(strat), ground(g), allowed(allow), with_bias(bias),
          nm(strat.vertex_count()) {
        const int p = strategy.p;
        coeff_of.assign(nm, std::vector<int>(nm, 0));
        for (int s = 0; s < nm; ++s) {
            std::size_t pos = 0;
            for (int t = 0; t < nm; ++t) {
                if (t == s || strategy.part(t) == strategy.part(s)) continue;
                coeff_of[s][t] = strategy.coeffs[static_cast<std::size_t>(s)][pos++];
            }
        }
        for (int k = 0; k < strategy.m; ++k) {
            for (int i = 0; i < strategy.n; ++i) order.push_back(i * strategy.m + k);
        }
        acc.assign(nm, 0);
        remaining.assign(nm, 0);
        for (int s = 0; s < nm; ++s) {
            if (with_bias) acc[s] = (p - strategy.bias[static_cast<std::size_t>(s)]) % p;
            remaining[s] = 1 + nm - strategy.n; // self plus the visible slots
        }
        x.assign(nm, -1);
    }

    // t contributes +v to its own constraint and -coeff*v to every
    // constraint that can see it (anything in another part).
    int contribution(int s, int t, int v) const {
        const int p = strategy.p;
        if (s == t) return v % p;
        return (p - coeff_of[s][t]) % p * v % p;
    }

    bool affects(int s, int t) const {
        return s == t || strategy.part(s) != strategy.part(t);
    }

    bool assign(int t, int v) {
        const int p = strategy.p;
        x[t] = v;
        bool ok = true;
        for (int s = 0; s < nm; ++s) {
            if (!affects(s, t)) continue;
            acc[s] = (acc[s] + contribution(s, t, v)) % p;
            if (--remaining[s] == 0 && !allowed[static_cast<std::size_t>(s * p + acc[s])]) {
                ok = false;
            }
        }
        return ok;
    }

    void unassign(int t, int v) {
        const int p = strategy.p;
        x[t] = -1;
        for (int s = 0; s < nm; ++s) {
            if (!affects(s, t)) continue;
            acc[s] = (acc[s] + p - contribution(s, t, v)) % p;
            ++remaining[s];
        }
    }

    bool dfs(std::size_t depth) {
        if (depth == order.size()) return true;
        const int t = order[depth];
        for (int v = 0; v < strategy.p; ++v) {
            const bool ok = assign(t, v);
            if (ok && dfs(depth + 1)) return true;
            unassign(t, v);
        }
        return false;
    }
};

} // namespace

PrimeFieldSpec::PrimeFieldSpec(int p) : p(p) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
        throw InvalidInputError("modulus " + std::to_string(p) + " is not prime");
    }
}

LinearStrategy::LinearStrategy(int n, int m, int p, std::vector<std::vector<int>> coeffs,
                               std::vector<int> bias)
    : n(n), m(m), p(PrimeFieldSpec(p).p), coeffs(std::move(coeffs)), bias(std::move(bias)) {
    if (n < 1 || m < 1) throw InvalidInputError("multipartite dimensions need n, m >= 1");
    const auto nm = static_cast<std::size_t>(vertex_count());
    if (this->coeffs.size() != nm || this->bias.size() != nm) {
        throw InvalidInputError("strategy needs one coefficient row and bias per vertex");
    }
    const std::size_t visible = nm - static_cast<std::size_t>(n);
    for (std::size_t v = 0; v < nm; ++v) {
        if (this->coeffs[v].size() != visible) {
            throw InvalidInputError("coefficient row size must match the visible vertices");
        }
        for (const int c : this->coeffs[v]) {
            if (c < 0 || c >= p) throw InvalidInputError("coefficient out of [0,p)");
        }
        if (this->bias[v] < 0 || this->bias[v] >= p) {
            throw InvalidInputError("bias out of [0,p)");
        }
    }
}

int LinearStrategy::affine_value(int v, const Coloring& x, bool with_bias) const {
    if (x.size() != vertex_count()) throw InvalidInputError("coloring size mismatch");
    long long sum = with_bias ? bias[static_cast<std::size_t>(v)] : 0;
    std::size_t pos = 0;
    for (int u = 0; u < vertex_count(); ++u) {
        if (u == v || part(u) == part(v)) continue;
        sum += static_cast<long long>(coeffs[static_cast<std::size_t>(v)][pos++]) *
               x.values[static_cast<std::size_t>(u)];
    }
    return static_cast<int>(sum % p);
}

LinearStrategy random_linear_strategy(int n, int m, int p, std::uint64_t seed) {
    PrimeFieldSpec field(p);
    if (n < 1 || m < 1) throw InvalidInputError("multipartite dimensions need n, m >= 1");
    Prng rng(seed);
    const int nm = n * m;
    const int visible = nm - n;
    std::vector<std::vector<int>> coeffs(static_cast<std::size_t>(nm));
    std::vector<int> bias(static_cast<std::size_t>(nm));
    for (int v = 0; v < nm; ++v) {
        coeffs[static_cast<std::size_t>(v)].resize(static_cast<std::size_t>(visible));
        for (int j = 0; j < visible; ++j) {
            coeffs[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)] =
                rng.color(field.p);
        }
        bias[static_cast<std::size_t>(v)] = rng.color(field.p);
    }
    return LinearStrategy(n, m, p, std::move(coeffs), std::move(bias));
}

Graph multipartite_graph(const LinearStrategy& strategy) {
    return Graph::multipartite(strategy.n, strategy.m);
}

StrategyProfile to_profile(const LinearStrategy& strategy) {
    std::vector<Guesser> guessers;
    guessers.reserve(static_cast<std::size_t>(strategy.vertex_count()));
    for (int v = 0; v < strategy.vertex_count(); ++v) {
        guessers.emplace_back(AffineGuesser{strategy.coeffs[static_cast<std::size_t>(v)],
                                            strategy.bias[static_cast<std::size_t>(v)]});
    }
    return StrategyProfile(strategy.p, std::move(guessers));
}

std::uint64_t SpreadFamily::member_count() const {
    if (const auto* mat = std::get_if<MaterializedFamily>(&rep)) return mat->members.size();
    return coloring_count(std::get<ImplicitFamily>(rep).strategy);
}

SpreadFamily implicit_family(FamilyKind kind, LinearStrategy strategy) {
    SpreadFamily family;
    family.ground = GroundSet{strategy.n, strategy.m, strategy.p, 2.0};
    family.rep = ImplicitFamily{kind, std::move(strategy)};
    return family;
}

std::vector<int> materialize_member(const SpreadFamily& family, const Coloring& x) {
    const ImplicitFamily& imp = require_implicit(family);
    const LinearStrategy& s = imp.strategy;
    if (x.size() != s.vertex_count()) throw InvalidInputError("coloring size mismatch");
    std::vector<int> member;
    member.reserve(static_cast<std::size_t>(s.vertex_count()));
    for (int v = 0; v < s.vertex_count(); ++v) {
        const int guess = s.affine_value(v, x, imp.kind == FamilyKind::F);
        const int value = ((x.values[static_cast<std::size_t>(v)] - guess) % s.p + s.p) % s.p;
        member.push_back(v * s.p + value);
    }
    return member;
}

SpreadFamily materialize_all(const SpreadFamily& family, std::uint64_t budget) {
    const ImplicitFamily& imp = require_implicit(family);
    const std::uint64_t total = coloring_count(imp.strategy);
    if (total > budget) {
        throw BudgetError("materializing every member is over budget",
                          std::to_string(total));
    }
    MaterializedFamily mat;
    mat.members.reserve(total);
    std::vector<int> entries(static_cast<std::size_t>(imp.strategy.vertex_count()), 0);
    do {
        mat.members.push_back(
            materialize_member(family, Coloring(imp.strategy.p, entries)));
    } while (next_coloring(entries, imp.strategy.p));
    SpreadFamily out;
    out.ground = family.ground;
    out.rep = std::move(mat);
    return out;
}

SpreadReport spread_value(const SpreadFamily& family, std::uint64_t budget) {
    const auto counts = subset_counts(family, budget);
    SpreadReport report;
    report.members = family.member_count();
    report.subsets_counted = counts.size();
    const auto n = static_cast<double>(report.members);
    bool first = true;
    for (const auto& [z, count] : counts) {
        const double value =
            std::pow(n / static_cast<double>(count), 1.0 / static_cast<double>(z.size()));
        if (first || value < report.r_star) {
            first = false;
            report.r_star = value;
            report.argmin = z;
            report.argmin_count = count;
        }
    }
    return report;
}

bool spread_at_least_p_pow_inv_m(const SpreadFamily& family, int p, int m,
                                 std::uint64_t budget) {
    if (p < 1 || m < 1) throw InvalidInputError("threshold needs p, m >= 1");
    const auto counts = subset_counts(family, budget);
    const BigUint n_pow_m =
        BigUint::pow(family.member_count(), static_cast<std::uint64_t>(m));
    for (const auto& [z, count] : counts) {
        const BigUint rhs =
            BigUint::pow(count, static_cast<std::uint64_t>(m)) *
            BigUint::pow(static_cast<std::uint64_t>(p), z.size());
        if (!(rhs <= n_pow_m)) return false;
    }
    return true;
}

std::optional<Coloring> find_member_within(const SpreadFamily& family,
                                           const std::vector<char>& allowed) {
    const ImplicitFamily& imp = require_implicit(family);
    if (allowed.size() != family.ground.size()) {
        throw InvalidInputError("allowed mask must cover the ground set");
    }
    SlotSearch search(imp.strategy, family.ground, allowed, imp.kind == FamilyKind::F);
    if (!search.dfs(0)) return std::nullopt;
    return Coloring(imp.strategy.p, search.x);
}

DefeatOutcome defeat_linear(const LinearStrategy& strategy, std::uint64_t seed,
                            int retries) {
    if (retries < 1) throw InvalidInputError("defeat needs at least one retry");
    const SpreadFamily f_family = implicit_family(FamilyKind::F, strategy);
    const SpreadFamily g_family = implicit_family(FamilyKind::G, strategy);
    const std::uint64_t ground_size = f_family.ground.size();
    const Graph graph = multipartite_graph(strategy);
    const StrategyProfile profile = to_profile(strategy);

    DefeatOutcome outcome;
    std::vector<char> v1(ground_size), v2(ground_size);
    for (int t = 0; t < retries; ++t) {
        outcome.retries_used = t + 1;
        Prng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        for (std::uint64_t e = 0; e < ground_size; ++e) {
            const bool heads = rng.coin();
            v1[e] = heads ? 1 : 0;
            v2[e] = heads ? 0 : 1;
        }
        const auto x_f = find_member_within(f_family, v1);
        if (!x_f) continue;
        const auto x_g = find_member_within(g_family, v2);
        if (!x_g) continue;
        std::vector<int> z(static_cast<std::size_t>(strategy.vertex_count()));
        for (std::size_t v = 0; v < z.size(); ++v) {
            z[v] = ((x_f->values[v] - x_g->values[v]) % strategy.p + strategy.p) %
                   strategy.p;
        }
        Coloring defeat(strategy.p, std::move(z));
        if (any_correct(graph, profile, defeat)) {
            throw ContractError("disjoint member difference failed to defeat the strategy");
        }
        outcome.coloring = std::move(defeat);
        return outcome;
    }
    return outcome;
}

std::optional<Coloring> brute_force_defeat(const LinearStrategy& strategy,
                                           std::uint64_t budget) {
    const std::uint64_t total = coloring_count(strategy);
    if (total > budget) {
        throw BudgetError("exhaustive defeat scan is over budget", std::to_string(total));
    }
    const Graph graph = multipartite_graph(strategy);
    const StrategyProfile profile = to_profile(strategy);
    std::vector<int> entries(static_cast<std::size_t>(strategy.vertex_count()), 0);
    do {
        Coloring x(strategy.p, entries);
        if (!any_correct(graph, profile, x)) return x;
    } while (next_coloring(entries, strategy.p));
    return std::nullopt;
}

TrialReport spread_lemma_trial(const SpreadFamily& family, int trials, std::uint64_t seed) {
    if (trials < 1) throw InvalidInputError("at least one trial required");
    if (family.ground.r < 1.0) throw InvalidInputError("sampling parameter r must be >= 1");
    const double keep = 1.0 / family.ground.r;
    const std::uint64_t ground_size = family.ground.size();
    const MaterializedFamily* mat = std::get_if<MaterializedFamily>(&family.rep);

    TrialReport report;
    report.trials = trials;
    std::vector<char> v(ground_size);
    for (int t = 0; t < trials; ++t) {
        Prng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        for (std::uint64_t e = 0; e < ground_size; ++e) v[e] = rng.unit() < keep ? 1 : 0;
        bool contained = false;
        if (mat) {
            for (const auto& member : mat->members) {
                contained = std::all_of(member.begin(), member.end(), [&](int e) {
                    return v[static_cast<std::size_t>(e)] != 0;
                });
                if (contained) break;
            }
        } else {
            contained = find_member_within(family, v).has_value();
        }
        if (contained) ++report.successes;
    }
    report.frequency = static_cast<double>(report.successes) / trials;
    return report;
}

} // namespace hatg::linear
