#include "ashwa/analysis/security.hpp"

#include <stdexcept>

#include "ashwa/analysis/binomial.hpp"
#include "ashwa/bft/thresholds.hpp"

namespace ashwa::analysis {

namespace {

void check_size(std::size_t n)
{
    if (n < kMinCommitteeSize) throw std::invalid_argument("committee size must be at least 4");
}

}  // namespace

double compromise_probability(std::size_t n, double alpha_a)
{
    check_size(n);
    return binomial_tail(static_cast<std::int64_t>(n), alpha_a, static_cast<std::int64_t>(bft::fault_threshold(n)));
}

Rational compromise_probability_exact(std::size_t n, const Rational& alpha_a)
{
    check_size(n);
    return binomial_tail_exact(static_cast<std::int64_t>(n), alpha_a,
                               static_cast<std::int64_t>(bft::fault_threshold(n)));
}

void SecurityQuery::validate() const
{
    if (epsilon <= 0 || epsilon >= 1) throw std::invalid_argument("epsilon must lie in (0, 1)");
    if (alpha_a < 0 || alpha_a >= 1) throw std::invalid_argument("alpha_a must lie in [0, 1)");
    if (max_n < kMinCommitteeSize) throw std::invalid_argument("max_n must be at least 4");
}

bool is_secure(std::size_t n, const Rational& alpha_a, const Rational& epsilon)
{
    if (n <= kExactSizingLimit) return compromise_probability_exact(n, alpha_a) <= epsilon;
    return compromise_probability(n, alpha_a.get_d()) <= epsilon.get_d();
}

std::optional<SizingResult> min_committee_size(const SecurityQuery& query)
{
    query.validate();
    for (std::size_t n = kMinCommitteeSize; n <= query.max_n; ++n) {
        if (is_secure(n, query.alpha_a, query.epsilon))
            return SizingResult{n, compromise_probability(n, query.alpha_a.get_d())};
    }
    return std::nullopt;
}

}  // namespace ashwa::analysis
