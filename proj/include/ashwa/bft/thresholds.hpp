#pragma once

#include <cstddef>
#include <stdexcept>

namespace ashwa::bft {

/// Signatures needed to commit: floor(2n/3) + 1.
constexpr std::size_t supermajority_threshold(std::size_t committee_size)
{
    if (committee_size < 1) throw std::invalid_argument("committee size must be at least 1");
    return 2 * committee_size / 3 + 1;
}

/// Fewest adversarial seats that compromise agreement: ceil((n + 2) / 3).
constexpr std::size_t fault_threshold(std::size_t committee_size)
{
    if (committee_size < 1) throw std::invalid_argument("committee size must be at least 1");
    return (committee_size + 2 + 2) / 3;
}

}  // namespace ashwa::bft
