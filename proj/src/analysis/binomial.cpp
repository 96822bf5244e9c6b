#include "ashwa/analysis/binomial.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace ashwa::analysis {

namespace {

void check_domain(std::int64_t n, std::int64_t k)
{
    if (n < 0) throw std::domain_error("binomial: n must be non-negative");
    if (k < 0 || k > n + 1) throw std::domain_error("binomial: k must lie in [0, n + 1], got " + std::to_string(k));
}

long double log_pmf(std::int64_t n, long double p, std::int64_t k)
{
    const auto nl = static_cast<long double>(n);
    const auto kl = static_cast<long double>(k);
    return std::lgamma(nl + 1) - std::lgamma(kl + 1) - std::lgamma(nl - kl + 1) + kl * std::log(p) +
           (nl - kl) * std::log1p(-p);
}

}  // namespace

double binomial_tail(std::int64_t n, double p, std::int64_t k)
{
    check_domain(n, k);
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binomial: p must lie in [0, 1]");
    if (k == 0) return 1.0;
    if (k > n || p == 0.0) return 0.0;
    if (p == 1.0) return 1.0;

    const long double pl = p;
    const long double odds = pl / (1 - pl);
    if (static_cast<long double>(k) > n * pl) {
        // Upper tail: terms shrink monotonically from k upwards.
        long double term = std::exp(log_pmf(n, pl, k));
        long double sum = 0;
        for (std::int64_t j = k; j <= n; ++j) {
            sum += term;
            if (term < sum * 1e-21L) break;
            term *= static_cast<long double>(n - j) / static_cast<long double>(j + 1) * odds;
        }
        return static_cast<double>(sum);
    }
    // Lower tail below k, summed downwards from its largest term.
    long double term = std::exp(log_pmf(n, pl, k - 1));
    long double sum = 0;
    for (std::int64_t j = k - 1; j >= 0; --j) {
        sum += term;
        if (term < sum * 1e-21L) break;
        term *= static_cast<long double>(j) / static_cast<long double>(n - j + 1) / odds;
    }
    return static_cast<double>(1 - sum);
}

Rational binomial_tail_exact(std::int64_t n, const Rational& p, std::int64_t k)
{
    check_domain(n, k);
    if (p < 0 || p > 1) throw std::domain_error("binomial: p must lie in [0, 1]");
    if (k == 0) return 1;
    if (k > n) return 0;

    // p = a/d: sum C(n, j) a^j (d - a)^(n - j) over j >= k, then divide by d^n.
    const mpz_class a = p.get_num();
    const mpz_class d = p.get_den();
    const mpz_class b = d - a;
    const auto count = static_cast<std::size_t>(n);
    std::vector<mpz_class> pow_b(count + 1);
    pow_b[0] = 1;
    for (std::size_t i = 1; i <= count; ++i) pow_b[i] = pow_b[i - 1] * b;

    mpz_class choose = 1;
    mpz_class pow_a = 1;
    mpz_class sum = 0;
    for (std::int64_t j = 0; j <= n; ++j) {
        if (j >= k) sum += choose * pow_a * pow_b[count - static_cast<std::size_t>(j)];
        choose = choose * (n - j) / (j + 1);
        pow_a *= a;
    }
    mpz_class denom;
    mpz_pow_ui(denom.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(n));
    Rational result(sum, denom);
    result.canonicalize();
    return result;
}

Rational binomial_pmf_exact(std::int64_t n, const Rational& p, std::int64_t k)
{
    if (n < 0) throw std::domain_error("binomial: n must be non-negative");
    if (k < 0 || k > n) return 0;
    mpz_class choose;
    mpz_bin_uiui(choose.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    const Rational q = 1 - p;
    Rational result = choose;
    for (std::int64_t i = 0; i < k; ++i) result *= p;
    for (std::int64_t i = k; i < n; ++i) result *= q;
    return result;
}

}  // namespace ashwa::analysis
