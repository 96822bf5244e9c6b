#pragma once

#include <cstdint>
#include <optional>

#include "ashwa/core/rational.hpp"

namespace ashwa::analysis {

/// Largest committee size for which sizing comparisons use exact arithmetic.
inline constexpr std::size_t kExactSizingLimit = 200;
inline constexpr std::size_t kMinCommitteeSize = 4;

/// Chance that an adversary holding alpha_a of the resources wins at least
/// fault_threshold(n) of the n seats.
double compromise_probability(std::size_t n, double alpha_a);
Rational compromise_probability_exact(std::size_t n, const Rational& alpha_a);

struct SecurityQuery {
    Rational epsilon;
    Rational alpha_a;
    std::size_t max_n = 1000;

    void validate() const;
};

struct SizingResult {
    std::size_t n = 0;
    /// Compromise probability at n.
    double probability = 0.0;
};

/// Smallest n in [4, max_n] whose compromise probability is at most epsilon.
/// Every n is checked: the threshold grows stepwise, so the probability is
/// not monotone in n.
std::optional<SizingResult> min_committee_size(const SecurityQuery& query);

/// compromise_probability(n, alpha) <= epsilon, decided exactly up to
/// kExactSizingLimit and in floating point beyond.
bool is_secure(std::size_t n, const Rational& alpha_a, const Rational& epsilon);

}  // namespace ashwa::analysis
