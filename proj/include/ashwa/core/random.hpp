#pragma once

#include <cstdint>
#include <random>

namespace ashwa {

/// Seeded random source with platform-independent derived draws.
///
/// std::mt19937_64's raw output is fixed by the standard, but the standard
/// distributions are not, so everything here is built on raw draws only.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform in [0, 1) with 53 bits of resolution.
    double uniform();
    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double exponential(double mean);

private:
    std::mt19937_64 engine_;
};

}  // namespace ashwa
