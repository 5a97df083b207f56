#pragma once

#include <cstdint>
#include <random>

#include "walkgen/ast.hpp"

namespace walkgen {

// Deterministic, platform-independent randomness. mt19937_64 output is
// fully specified by the standard; the draw helpers below avoid
// std::uniform_int_distribution, whose mapping is implementation-defined.
//
// Stream splitting: logical stream k of master seed s is seeded with
// splitmix64(s + (k + 1) * 0x9E3779B97F4A7C15). The search engine uses one
// stream per restart; the random-test baseline uses stream 0.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    static Rng stream(std::uint64_t master_seed, std::uint64_t index) {
        return Rng(splitmix64(master_seed + (index + 1) * 0x9E3779B97F4A7C15ull));
    }

    std::uint64_t next_u64() { return gen_(); }

    // Unbiased draw in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = gen_();
            if (r >= threshold) return r % n;
        }
    }

    // 53-bit uniform double in [0, 1).
    double next_double() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    bool chance(double p) { return next_double() < p; }

    std::int64_t uniform_value(const VariableDomain& dom) {
        return dom.lo() + static_cast<std::int64_t>(
                              below(dom.span() == UINT64_MAX ? UINT64_MAX
                                                             : dom.span() + 1));
    }

private:
    std::mt19937_64 gen_;
};

inline constexpr const char* kRngName = "mt19937_64";

}  // namespace walkgen
