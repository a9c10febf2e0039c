#pragma once

#include <cstdint>
#include <vector>

#include "turannical/errors.hpp"

namespace turannical {

using Count = std::uint64_t;

Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);

// Binomial coefficient; throws OverflowError instead of wrapping.
Count binomial(Count n, Count k);

// Integer power with overflow detection.
Count checked_pow(Count base, unsigned exponent);

// Rank of the r-subset `subset` (sorted ascending) among all r-subsets of
// {0..n-1} in lexicographic order, and the inverse.
Count rank_subset(const std::vector<std::uint32_t>& subset, std::uint32_t n);
std::vector<std::uint32_t> unrank_subset(Count rank, std::uint32_t n, std::uint32_t r);

// Advances `subset` to the next r-subset in lexicographic order; false when exhausted.
bool next_subset(std::vector<std::uint32_t>& subset, std::uint32_t n);

// Index of the unordered pair {u,v}, u != v, in the lexicographic order of all pairs of [n].
inline std::uint32_t pair_index(std::uint32_t u, std::uint32_t v, std::uint32_t n) {
    if (u > v) std::swap(u, v);
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

}  // namespace turannical
