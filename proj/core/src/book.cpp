#include "hatg/book.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "hatg/biguint.hpp"
#include "hatg/clique_handler.hpp"
#include "hatg/errors.hpp"
#include "hatg/numeric.hpp"
#include "hatg/rng.hpp"

namespace hatg::book {

namespace {

std::uint64_t domain_size(const BookParameters& params) {
    const auto domain = checked_pow_u64(static_cast<std::uint64_t>(params.q),
                                        static_cast<std::uint64_t>(params.d));
    if (!domain) throw InvalidInputError("q^d does not fit 64 bits");
    return *domain;
}

void validate_parameters(const BookParameters& params) {
    if (params.d < 1 || params.q < 1) throw InvalidInputError("book needs d >= 1, q >= 1");
    const std::uint64_t domain = domain_size(params);
    if (params.s < 1 || params.s > domain) {
        throw InvalidInputError("onto threshold s must lie in [1, q^d]");
    }
}

// Cost of checking every s-subset against every member.
bool exact_cost_within(const BookParameters& params, std::uint64_t budget) {
    const std::uint64_t domain = domain_size(params);
    const auto subsets = checked_binomial(domain, params.s);
    if (!subsets) return false;
    const unsigned __int128 cost = static_cast<unsigned __int128>(*subsets) * params.m * params.s;
    return cost <= budget;
}

// True iff some member restricted to the subset hits every color.  `stamp`
// and `epoch` implement reset-free seen marks.
bool some_member_onto(const std::vector<std::vector<int>>& members,
                      const std::vector<std::uint64_t>& subset, int q,
                      std::vector<std::uint64_t>& stamp, std::uint64_t& epoch) {
    for (const auto& member : members) {
        ++epoch;
        int hit = 0;
        for (const std::uint64_t idx : subset) {
            const int c = member[static_cast<std::size_t>(idx)];
            if (stamp[static_cast<std::size_t>(c)] != epoch) {
                stamp[static_cast<std::size_t>(c)] = epoch;
                if (++hit == q) break;
            }
        }
        if (hit == q) return true;
    }
    return false;
}

bool next_combination_u64(std::vector<std::uint64_t>& comb, std::uint64_t n) {
    const std::size_t k = comb.size();
    for (std::size_t i = k; i-- > 0;) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::uint64_t> sample_distinct(Prng& rng, std::uint64_t n, std::uint64_t k) {
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(k));
    while (out.size() < k) {
        const std::uint64_t idx = rng.below(n);
        if (std::find(out.begin(), out.end(), idx) == out.end()) out.push_back(idx);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

BookParameters lemma_parameters(int d) {
    if (d < 2) throw InvalidInputError("the parameterization needs d >= 2");
    const auto du = static_cast<std::uint64_t>(d);
    const BigUint q_big = BigUint::pow(du, static_cast<std::uint64_t>(d - 2));
    const BigUint m_big = BigUint::pow(du, static_cast<std::uint64_t>(d + 3));
    const BigUint s_big = BigUint::pow(du, static_cast<std::uint64_t>(d));
    if (!q_big.fits_u64() || q_big.to_u64() > static_cast<std::uint64_t>(INT32_MAX) ||
        !m_big.fits_u64() || !s_big.fits_u64()) {
        throw InvalidInputError("parameters for d = " + std::to_string(d) +
                                " overflow the field types");
    }
    return BookParameters{d, static_cast<int>(q_big.to_u64()), m_big.to_u64(), s_big.to_u64()};
}

OntoCheck verify_onto_family(OntoFamily& family, std::uint64_t budget) {
    validate_parameters(family.params);
    const int q = family.params.q;
    const std::uint64_t domain = domain_size(family.params);
    if (!exact_cost_within(family.params, budget)) {
        const auto subsets = checked_binomial(domain, family.params.s);
        throw BudgetError("exact onto verification is over budget",
                          subsets ? std::to_string(*subsets) : "more than 2^64");
    }
    OntoCheck check;
    check.exact = true;
    std::vector<std::uint64_t> stamp(static_cast<std::size_t>(q), 0);
    std::uint64_t epoch = 0;
    std::vector<std::uint64_t> comb(static_cast<std::size_t>(family.params.s));
    for (std::size_t i = 0; i < comb.size(); ++i) comb[i] = i;
    do {
        ++check.subsets_checked;
        if (!some_member_onto(family.members, comb, q, stamp, epoch)) {
            check.ok = false;
            check.violating_subset = comb;
            return check;
        }
    } while (next_combination_u64(comb, domain));
    check.ok = true;
    family.verified = OntoFamily::Verified::exact;
    return check;
}

OntoCheck verify_onto_family_sampled(const OntoFamily& family, std::uint64_t samples,
                                     std::uint64_t seed) {
    validate_parameters(family.params);
    const int q = family.params.q;
    const std::uint64_t domain = domain_size(family.params);
    OntoCheck check;
    check.exact = false;
    std::vector<std::uint64_t> stamp(static_cast<std::size_t>(q), 0);
    std::uint64_t epoch = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        Prng rng(derive_seed(seed, i));
        const auto subset = sample_distinct(rng, domain, family.params.s);
        ++check.subsets_checked;
        if (!some_member_onto(family.members, subset, q, stamp, epoch)) {
            check.ok = false;
            check.violating_subset = subset;
            return check;
        }
    }
    check.ok = true;
    return check;
}

OntoFamily build_onto_family(const BookParameters& params, std::uint64_t seed,
                             const BuildOptions& options) {
    validate_parameters(params);
    if (params.m < 1) throw InvalidInputError("a family needs at least one member");
    const std::uint64_t domain = domain_size(params);
    const unsigned __int128 cells = static_cast<unsigned __int128>(params.m) * domain;
    if (cells > 100'000'000ULL) {
        throw BudgetError("family tables would need " +
                              (BigUint{params.m} * BigUint{domain}).to_string() + " cells",
                          (BigUint{params.m} * BigUint{domain}).to_string());
    }
    const bool exact = exact_cost_within(params, options.exact_budget);

    OntoCheck last;
    for (int attempt = 0; attempt < options.retries; ++attempt) {
        OntoFamily family;
        family.params = params;
        Prng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        family.members.assign(static_cast<std::size_t>(params.m), {});
        for (auto& member : family.members) {
            member.resize(static_cast<std::size_t>(domain));
            for (auto& cell : member) cell = rng.color(params.q);
        }
        if (exact) {
            last = verify_onto_family(family, options.exact_budget);
        } else {
            last = verify_onto_family_sampled(family, options.samples,
                                              derive_seed(seed, 0x5afe + attempt));
            if (last.ok) family.verified = OntoFamily::Verified::sampled;
        }
        if (last.ok) return family;
    }
    std::string subset_text = "{";
    if (last.violating_subset) {
        for (std::size_t i = 0; i < last.violating_subset->size(); ++i) {
            if (i > 0) subset_text += ",";
            subset_text += std::to_string((*last.violating_subset)[i]);
        }
    }
    subset_text += "}";
    throw SearchError("no onto family after " + std::to_string(options.retries) +
                      " attempts; last violating subset " + subset_text);
}

namespace {

struct CentralCache {
    std::mutex mu;
    std::map<std::vector<int>, CliqueStrategy> handlers;
};

} // namespace

StructuredGuesser make_book_central_guesser(
    int which, BookParameters params,
    std::shared_ptr<const std::vector<std::vector<int>>> members) {
    if (which < 0 || which >= params.d) throw InvalidInputError("central vertex out of range");
    nlohmann::json tables = nlohmann::json::array();
    for (const auto& member : *members) tables.push_back(member);
    StructuredGuesser g;
    g.meta = {{"role", "book-central"}, {"which", which},   {"d", params.d},
              {"q", params.q},          {"m", params.m},    {"s", params.s},
              {"members", std::move(tables)}};
    auto cache = std::make_shared<CentralCache>();
    const std::uint64_t domain = domain_size(params);
    g.fn = [params, domain, which, members = std::move(members),
            cache](std::span<const int> obs) -> int {
        const auto d = static_cast<std::size_t>(params.d);
        const int q = params.q;
        std::vector<int> others(obs.begin(), obs.begin() + (d - 1));
        std::vector<int> outer(obs.begin() + (d - 1), obs.end());
        {
            std::lock_guard lock(cache->mu);
            const auto it = cache->handlers.find(outer);
            if (it != cache->handlers.end()) return it->second.guess(which, others);
        }
        std::vector<std::vector<int>> survivors;
        std::vector<int> c(d, 0);
        for (std::uint64_t idx = 0; idx < domain; ++idx) {
            bool alive = true;
            for (std::size_t i = 0; i < members->size(); ++i) {
                if ((*members)[i][static_cast<std::size_t>(idx)] == outer[i]) {
                    alive = false;
                    break;
                }
            }
            if (alive) survivors.push_back(c);
            for (std::size_t pos = d; pos-- > 0;) {
                if (++c[pos] < q) break;
                c[pos] = 0;
            }
        }
        HandleOutcome handled = handle_known_set(KnownSet(params.d, q, std::move(survivors)));
        if (!handled.feasible()) {
            throw ContractError("central clique cannot handle a survivor set");
        }
        const int out = handled.strategy->guess(which, others);
        std::lock_guard lock(cache->mu);
        cache->handlers.emplace(std::move(outer), std::move(*handled.strategy));
        return out;
    };
    return g;
}

StrategyProfile construct_book_strategy(const OntoFamily& family) {
    validate_parameters(family.params);
    if (family.verified == OntoFamily::Verified::none) {
        throw InvalidInputError("family must be verified before building a strategy");
    }
    if (family.members.size() != family.params.m) {
        throw InvalidInputError("family member count differs from its parameters");
    }
    if (!(BigUint{family.params.s - 1} <= capacity(family.params.d))) {
        throw InvalidInputError("survivor bound s-1 exceeds the clique capacity");
    }
    auto members = std::make_shared<const std::vector<std::vector<int>>>(family.members);
    std::vector<Guesser> guessers;
    guessers.reserve(static_cast<std::size_t>(family.params.d) + family.members.size());
    for (int j = 0; j < family.params.d; ++j) {
        guessers.emplace_back(make_book_central_guesser(j, family.params, members));
    }
    for (const auto& member : family.members) {
        guessers.emplace_back(TableGuesser{member});
    }
    return StrategyProfile(family.params.q, std::move(guessers));
}

UnionBoundChain union_bound_chain(int d) {
    if (d < 2) throw InvalidInputError("the chain needs d >= 2");
    const auto dl = static_cast<long double>(d);
    const long double q = std::pow(dl, dl - 2);
    const long double dd = std::pow(dl, dl);
    UnionBoundChain chain;
    chain.value = q * std::pow(1.0L - 1.0L / q, dd);
    chain.middle = q * std::exp(-dd / q);
    chain.loose = q * std::exp(-dl * dl);
    chain.holds = chain.value <= chain.middle && chain.middle <= chain.loose &&
                  chain.loose < 0.5L;
    return chain;
}

CertifiedQ certified_q(int d, std::uint64_t m_available, std::uint64_t seed,
                       const BuildOptions& options, std::uint64_t verify_budget) {
    if (d < 1) throw InvalidInputError("certification needs d >= 1");
    CertifiedQ best;
    if (m_available == 0) return best;

    const BigUint cap = capacity(d);
    const std::uint64_t cap_u64 = cap.fits_u64() ? cap.to_u64() : UINT64_MAX - 1;
    int consecutive_failures = 0;
    for (int q = 2; q <= 1 << 20; ++q) {
        const auto domain = checked_pow_u64(static_cast<std::uint64_t>(q),
                                            static_cast<std::uint64_t>(d));
        if (!domain) break;
        BookParameters params;
        params.d = d;
        params.q = q;
        params.s = std::min(*domain, cap_u64 + 1);
        params.m = std::min<std::uint64_t>(m_available, 8);
        if (!exact_cost_within(params, options.exact_budget)) break;
        try {
            OntoFamily family = build_onto_family(params, derive_seed(seed, q), options);
            best.q = q;
            best.params = params;
            best.family = std::move(family);
            consecutive_failures = 0;
        } catch (const SearchError&) {
            if (++consecutive_failures >= 2) break;
        }
    }

    if (best.q > 1) {
        const auto total = checked_pow_u64(
            static_cast<std::uint64_t>(best.q),
            static_cast<std::uint64_t>(best.params.d) + best.params.m);
        if (total && *total <= verify_budget) {
            const Graph graph = Graph::book(best.params.d, static_cast<int>(best.params.m));
            const StrategyProfile profile = construct_book_strategy(best.family);
            const VerifyOutcome outcome = verify_exhaustive(graph, profile, verify_budget);
            if (!outcome.winning()) {
                throw ContractError("certified family lost an exhaustive verification");
            }
            best.end_to_end_verified = true;
            best.end_to_end_checked = outcome.checked;
        }
    }
    return best;
}

} // namespace hatg::book
