#pragma once

#include <cstdint>

namespace turannical {

// SplitMix64 used in counter mode: output k of stream `key` is
// mix(key + (k + 1) * golden). Any output can be computed independently of
// the others, which keeps sampling reproducible across platforms and thread
// counts.
class CounterRng {
public:
    static constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ULL;

    explicit CounterRng(std::uint64_t key, std::uint64_t counter = 0) : key_(key), counter_(counter) {}

    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static constexpr std::uint64_t at(std::uint64_t key, std::uint64_t index) { return mix(key + (index + 1) * golden); }

    // Uniform in [0, 1) with 53 random bits.
    static constexpr double uniform_at(std::uint64_t key, std::uint64_t index) {
        return static_cast<double>(at(key, index) >> 11) * 0x1.0p-53;
    }

    std::uint64_t next() { return at(key_, counter_++); }
    double uniform() { return uniform_at(key_, counter_++); }

private:
    std::uint64_t key_;
    std::uint64_t counter_;
};

// Stream key for sub-stream `a`/`b` of a master seed.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
    return CounterRng::mix(CounterRng::mix(master ^ CounterRng::mix(a + CounterRng::golden)) + b * CounterRng::golden);
}

}  // namespace turannical
