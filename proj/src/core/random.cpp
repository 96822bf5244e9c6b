#include "ashwa/core/random.hpp"

#include <cmath>
#include <stdexcept>

namespace ashwa {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    // Rejection keeps the draw exactly uniform.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

double Rng::exponential(double mean)
{
    if (!(mean > 0)) throw std::invalid_argument("Rng::exponential: mean must be positive");
    return -mean * std::log1p(-uniform());
}

}  // namespace ashwa
