#pragma once

#include <cstdint>

#include "ashwa/core/rational.hpp"

namespace ashwa::analysis {

/// P(X >= k) for X ~ Binomial(n, p). Requires 0 <= k <= n + 1 and p in [0, 1].
double binomial_tail(std::int64_t n, double p, std::int64_t k);

/// Exact P(X >= k); same domain.
Rational binomial_tail_exact(std::int64_t n, const Rational& p, std::int64_t k);

/// Exact P(X == k); zero outside [0, n].
Rational binomial_pmf_exact(std::int64_t n, const Rational& p, std::int64_t k);

}  // namespace ashwa::analysis
