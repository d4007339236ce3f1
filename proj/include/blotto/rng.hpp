#pragma once

#include <cstdint>

namespace blotto {

// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Counter-derived splitmix64 stream. Streams for distinct (seed, counter)
// pairs are independent for Monte Carlo purposes, so replications can run in
// any order, on any number of threads, and reproduce bit-identically.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t counter)
        : state_(mix64(mix64(seed) + 0x9E3779B97F4A7C15ull * (counter + 1))) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound). bound must be >= 1.
    std::uint32_t next_below(std::uint32_t bound) {
        return static_cast<std::uint32_t>(next_u64() % bound);
    }

private:
    std::uint64_t state_;
};

}  // namespace blotto
