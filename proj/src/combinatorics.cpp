#include "turannical/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

namespace turannical {

Count checked_add(Count a, Count b) {
    Count out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("64-bit count overflow in addition");
    return out;
}

Count checked_mul(Count a, Count b) {
    Count out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("64-bit count overflow in multiplication");
    return out;
}

Count binomial(Count n, Count k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    // Multiplicative formula with 128-bit intermediates; each partial product is itself a binomial.
    unsigned __int128 acc = 1;
    for (Count i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<Count>::max())
            throw OverflowError("binomial(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds 64 bits");
    }
    return static_cast<Count>(acc);
}

Count checked_pow(Count base, unsigned exponent) {
    Count out = 1;
    for (unsigned i = 0; i < exponent; ++i) out = checked_mul(out, base);
    return out;
}

Count rank_subset(const std::vector<std::uint32_t>& subset, std::uint32_t n) {
    const auto r = static_cast<std::uint32_t>(subset.size());
    Count rank = 0;
    std::uint32_t prev = 0;
    for (std::uint32_t i = 0; i < r; ++i) {
        for (std::uint32_t x = (i == 0 ? 0 : prev + 1); x < subset[i]; ++x)
            rank = checked_add(rank, binomial(n - x - 1, r - i - 1));
        prev = subset[i];
    }
    return rank;
}

std::vector<std::uint32_t> unrank_subset(Count rank, std::uint32_t n, std::uint32_t r) {
    std::vector<std::uint32_t> out;
    out.reserve(r);
    std::uint32_t x = 0;
    for (std::uint32_t i = 0; i < r; ++i) {
        while (true) {
            const Count block = binomial(n - x - 1, r - i - 1);
            if (rank < block) break;
            rank -= block;
            ++x;
        }
        out.push_back(x);
        ++x;
    }
    return out;
}

bool next_subset(std::vector<std::uint32_t>& subset, std::uint32_t n) {
    const auto r = static_cast<std::uint32_t>(subset.size());
    if (r == 0) return false;
    std::uint32_t i = r;
    while (i > 0) {
        --i;
        if (subset[i] < n - r + i) {
            ++subset[i];
            for (std::uint32_t j = i + 1; j < r; ++j) subset[j] = subset[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace turannical
