#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "hatg/biguint.hpp"

namespace hatg {

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

/// base^exp, or nullopt on 64-bit overflow.
inline std::optional<std::uint64_t> checked_pow_u64(std::uint64_t base, std::uint64_t exp) {
    unsigned __int128 r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        r *= base;
        if (r > UINT64_MAX) return std::nullopt;
    }
    return static_cast<std::uint64_t>(r);
}

/// log(n choose k), for budget estimates only.
inline double log_binomial(double n, double k) {
    if (k < 0 || k > n) return -1e300;
    return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

/// n choose k, or nullopt on overflow.
inline std::optional<std::uint64_t> checked_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) return std::nullopt;
    }
    return static_cast<std::uint64_t>(r);
}

/// Exact n choose k via a Pascal row, for counts that may exceed 64 bits.
inline BigUint big_binomial(unsigned n, unsigned k) {
    if (k > n) return BigUint{0};
    k = std::min(k, n - k);
    std::vector<BigUint> row(static_cast<std::size_t>(k) + 1, BigUint{0});
    row[0] = BigUint{1};
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = std::min(i, k); j >= 1; --j) {
            row[j] = row[j] + row[j - 1];
        }
    }
    return row[k];
}

} // namespace hatg
