#include "hatg/randgraph.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "hatg/biguint.hpp"
#include "hatg/errors.hpp"
#include "hatg/rng.hpp"

namespace hatg::randgraph {

namespace {

int popcount_row(const std::vector<std::uint64_t>& row) {
    int total = 0;
    for (const std::uint64_t word : row) total += __builtin_popcountll(word);
    return total;
}

} // namespace

std::uint64_t GnpSample::edge_count() const {
    std::uint64_t twice = 0;
    for (const auto& row : rows) twice += static_cast<std::uint64_t>(popcount_row(row));
    return twice / 2;
}

int GnpSample::degree(int v) const { return popcount_row(rows[static_cast<std::size_t>(v)]); }

GnpSample sample_gnp(int n, std::uint64_t seed) {
    if (n < 1) throw InvalidInputError("sample needs n >= 1");
    if (n > 100'000) throw BudgetError("adjacency rows over the memory budget");
    GnpSample sample;
    sample.n = n;
    sample.seed = seed;
    const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
    sample.rows.assign(static_cast<std::size_t>(n), std::vector<std::uint64_t>(words, 0));

    // One bit per unordered pair, (u,v) lexicographic with u < v, drawn
    // LSB-first from successive generator words.
    Prng rng(seed);
    std::uint64_t word = 0;
    int bits_left = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (bits_left == 0) {
                word = rng.next();
                bits_left = 64;
            }
            const bool edge = word & 1u;
            word >>= 1;
            --bits_left;
            if (edge) {
                sample.rows[static_cast<std::size_t>(u)][static_cast<std::size_t>(v) / 64] |=
                    std::uint64_t{1} << (static_cast<std::size_t>(v) % 64);
                sample.rows[static_cast<std::size_t>(v)][static_cast<std::size_t>(u) / 64] |=
                    std::uint64_t{1} << (static_cast<std::size_t>(u) % 64);
            }
        }
    }
    return sample;
}

int target_d(std::uint64_t n) {
    if (n < 2) throw InvalidInputError("target size needs n >= 2");
    const BigUint budget{n};
    int best = 0;
    for (int d = 1;; ++d) {
        const auto du = static_cast<std::uint64_t>(d);
        const BigUint cost = BigUint::pow(du, du + 3) * BigUint::pow(2, du + 1);
        if (!(cost <= budget)) break;
        best = d;
    }
    return best;
}

std::vector<TrendRow> target_d_trend(int lo_exponent, int hi_exponent) {
    if (lo_exponent < 2 || hi_exponent < lo_exponent || hi_exponent > 63) {
        throw InvalidInputError("trend exponents must satisfy 2 <= lo <= hi <= 63");
    }
    std::vector<TrendRow> rows;
    for (int e = lo_exponent; e <= hi_exponent; ++e) {
        TrendRow row;
        row.exponent = e;
        row.d = target_d(std::uint64_t{1} << e);
        const double ln_n = e * std::log(2.0);
        row.ratio = row.d * std::log(ln_n) / ln_n;
        rows.push_back(row);
    }
    return rows;
}

namespace {

struct CliqueSearch {
    const GnpSample& sample;
    int d;
    std::uint64_t cap;
    std::size_t words;

    std::uint64_t cliques_found = 0;
    int best_count = -1;
    std::vector<int> best_clique;
    std::vector<std::uint64_t> best_commons;

    std::vector<int> chosen;
    std::vector<std::uint64_t> commons_scratch;

    CliqueSearch(const GnpSample& s, int d, std::uint64_t cap)
        : sample(s), d(d), cap(cap), words(s.rows.front().size()),
          commons_scratch(words) {}

    void emit() {
        ++cliques_found;
        std::fill(commons_scratch.begin(), commons_scratch.end(), ~std::uint64_t{0});
        for (const int c : chosen) {
            for (std::size_t w = 0; w < words; ++w) {
                commons_scratch[w] &= sample.rows[static_cast<std::size_t>(c)][w];
            }
        }
        // Trailing bits past n are zero in every row, so they are already
        // clear after the first AND (d >= 1 guarantees one).
        int count = 0;
        for (const std::uint64_t w : commons_scratch) count += __builtin_popcountll(w);
        if (count > best_count) {
            best_count = count;
            best_clique = chosen;
            best_commons = commons_scratch;
        }
    }

    // cand holds vertices beyond the last chosen one, adjacent to everything
    // chosen so far and of degree at least d-1.
    void dfs(const std::vector<std::uint64_t>& cand) {
        if (cliques_found >= cap) return;
        for (std::size_t w = 0; w < words && cliques_found < cap; ++w) {
            std::uint64_t bits = cand[w];
            while (bits != 0) {
                const int v = static_cast<int>(w * 64 +
                    static_cast<std::size_t>(__builtin_ctzll(bits)));
                bits &= bits - 1;
                chosen.push_back(v);
                if (static_cast<int>(chosen.size()) == d) {
                    emit();
                } else {
                    std::vector<std::uint64_t> next(words);
                    const auto& row = sample.rows[static_cast<std::size_t>(v)];
                    for (std::size_t i = 0; i < words; ++i) next[i] = cand[i] & row[i];
                    // keep only vertices after v
                    const std::size_t vw = static_cast<std::size_t>(v) / 64;
                    for (std::size_t i = 0; i < vw; ++i) next[i] = 0;
                    if (static_cast<std::size_t>(v) % 64 == 63) {
                        next[vw] = 0;
                    } else {
                        next[vw] &= ~((std::uint64_t{2} << (static_cast<std::size_t>(v) % 64)) - 1);
                    }
                    int remaining = 0;
                    for (const std::uint64_t word : next) {
                        remaining += __builtin_popcountll(word);
                    }
                    if (static_cast<int>(chosen.size()) + remaining >= d) dfs(next);
                }
                chosen.pop_back();
                if (cliques_found >= cap) return;
            }
        }
    }
};

} // namespace

std::optional<BookEmbedding> find_book(const GnpSample& sample, int d,
                                       const FindBookOptions& options) {
    if (d < 1 || d > sample.n) throw InvalidInputError("clique size out of range");
    if (options.clique_cap < 1) throw InvalidInputError("clique cap must be positive");

    const std::size_t words = sample.rows.front().size();
    std::vector<std::uint64_t> eligible(words, 0);
    for (int v = 0; v < sample.n; ++v) {
        if (sample.degree(v) >= d - 1) {
            eligible[static_cast<std::size_t>(v) / 64] |=
                std::uint64_t{1} << (static_cast<std::size_t>(v) % 64);
        }
    }
    CliqueSearch search(sample, d, options.clique_cap);
    search.dfs(eligible);
    if (search.cliques_found == 0) return std::nullopt;

    BookEmbedding embedding;
    embedding.clique = search.best_clique;
    for (int v = 0; v < sample.n; ++v) {
        if ((search.best_commons[static_cast<std::size_t>(v) / 64] >>
             (static_cast<std::size_t>(v) % 64)) & 1u) {
            embedding.commons.push_back(v);
        }
    }
    for (std::size_t i = 0; i < embedding.clique.size(); ++i) {
        for (std::size_t j = i + 1; j < embedding.clique.size(); ++j) {
            if (!sample.adjacent(embedding.clique[i], embedding.clique[j])) {
                throw ContractError("embedding clique is not a clique");
            }
        }
    }
    for (const int c : embedding.commons) {
        for (const int k : embedding.clique) {
            if (!sample.adjacent(c, k)) {
                throw ContractError("embedding common vertex misses the clique");
            }
        }
    }
    return embedding;
}

LowerBoundReport certified_lower_bound(const GnpSample& sample, int d_override,
                                       const book::BuildOptions& options,
                                       const FindBookOptions& find_options) {
    const auto start = std::chrono::steady_clock::now();
    LowerBoundReport report;
    report.n = sample.n;
    report.seed = sample.seed;

    std::optional<BookEmbedding> embedding;
    if (d_override > 0) {
        report.d = d_override;
        embedding = find_book(sample, d_override, find_options);
    } else {
        int d = std::max(1, sample.n >= 2 ? target_d(static_cast<std::uint64_t>(sample.n))
                                          : 0);
        d = std::min(d, sample.n);
        for (; d >= 1; --d) {
            embedding = find_book(sample, d, find_options);
            if (embedding) {
                report.d = d;
                break;
            }
        }
    }

    if (embedding) {
        report.found = true;
        report.m_found = embedding->commons.size();
        const book::CertifiedQ certified = book::certified_q(
            report.d, report.m_found, derive_seed(sample.seed, 0xb00c), options);
        report.q_certified = certified.q;
        report.end_to_end_verified = certified.end_to_end_verified;
    }

    const auto stop = std::chrono::steady_clock::now();
    report.wall_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return report;
}

} // namespace hatg::randgraph
