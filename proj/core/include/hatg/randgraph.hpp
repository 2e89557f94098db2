#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hatg/book.hpp"

namespace hatg::randgraph {

// G(n, 1/2) with adjacency kept as bit rows so common neighborhoods reduce
// to word-wise ANDs.  Each unordered pair flips one seeded coin, pairs in
// (u, v) lexicographic order with u < v.
struct GnpSample {
    int n = 0;
    std::uint64_t seed = 0;
    std::vector<std::vector<std::uint64_t>> rows; // n rows of ceil(n/64) words

    bool adjacent(int u, int v) const {
        return (rows[static_cast<std::size_t>(u)][static_cast<std::size_t>(v) / 64] >>
                (static_cast<std::size_t>(v) % 64)) & 1u;
    }
    std::uint64_t edge_count() const;
    int degree(int v) const;
};

GnpSample sample_gnp(int n, std::uint64_t seed);

// Exact largest d with 2 * d^(d+3) * 2^d <= n, i.e. d^d * d^3 <= n / 2^(d+1),
// computed in exact big integers; 0 when even d = 1 fails.
int target_d(std::uint64_t n);

struct TrendRow {
    int exponent = 0; // n = 2^exponent
    int d = 0;
    double ratio = 0; // d * ln ln n / ln n, drifts toward 1
};
std::vector<TrendRow> target_d_trend(int lo_exponent = 10, int hi_exponent = 60);

// A d-clique plus every vertex adjacent to all of it.
struct BookEmbedding {
    std::vector<int> clique;  // ascending, pairwise adjacent
    std::vector<int> commons; // ascending, each adjacent to the whole clique
};

struct FindBookOptions {
    std::uint64_t clique_cap = 10'000; // stop after this many complete d-cliques
};

// Enumerates d-cliques in ascending vertex order (vertices of degree < d-1
// discarded up front), keeping the one with the most common neighbors among
// the first clique_cap found.  The returned embedding is re-checked against
// the adjacency rows.  nullopt = no d-clique among the explored branches.
std::optional<BookEmbedding> find_book(const GnpSample& sample, int d,
                                       const FindBookOptions& options = {});

struct LowerBoundReport {
    int n = 0;
    std::uint64_t seed = 0;
    bool found = false;   // a book embedding was located at depth d
    int d = 0;            // clique size actually used
    std::uint64_t m_found = 0;
    int q_certified = 1;
    bool end_to_end_verified = false;
    std::int64_t wall_ms = 0;
};

// target_d, then find_book, then the book certification on the harvested
// common neighborhood; every certified q is backed by an exactly verified
// family.  With d_override = 0 the clique size starts at max(1, target_d(n))
// and falls back one at a time when no clique exists (d = 1 always
// succeeds); an explicit override is used as-is and reports found = false
// when absent.
LowerBoundReport certified_lower_bound(const GnpSample& sample, int d_override = 0,
                                       const book::BuildOptions& options = {},
                                       const FindBookOptions& find_options = {});

} // namespace hatg::randgraph
