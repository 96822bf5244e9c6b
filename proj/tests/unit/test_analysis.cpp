#include <doctest.h>

#include <cmath>

#include "ashwa/analysis/binomial.hpp"
#include "ashwa/analysis/nic.hpp"
#include "ashwa/analysis/security.hpp"
#include "ashwa/bft/thresholds.hpp"
#include "ashwa/core/random.hpp"
#include "oracles/oracles.hpp"

using namespace ashwa;
using namespace ashwa::analysis;

namespace {

Rational ratio(long a, long b)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("binomial tail basics")
{
    CHECK(binomial_tail(10, 0.3, 0) == 1.0);
    CHECK(binomial_tail(10, 0.5, 4) == doctest::Approx(0.828125).epsilon(1e-15));
    CHECK(binomial_tail_exact(10, ratio(1, 2), 4) == 1 - ratio(176, 1024));
    CHECK(binomial_tail(10, 0.0, 1) == 0.0);
    CHECK(binomial_tail(10, 1.0, 10) == 1.0);
    CHECK(binomial_tail(10, 0.4, 11) == 0.0);
    CHECK_THROWS(binomial_tail(10, 0.4, 12));
    CHECK_THROWS(binomial_tail(10, 1.5, 2));
    CHECK_THROWS(binomial_tail(-1, 0.5, 0));
    CHECK_THROWS(binomial_tail_exact(10, ratio(1, 2), -1));
}

TEST_CASE("exact tail agrees with the convolution oracle")
{
    for (std::int64_t n : {1, 4, 17, 51, 90}) {
        for (const auto& p : {ratio(3, 20), ratio(1, 3), ratio(99, 100)})
            for (std::int64_t k = 0; k <= n + 1; k += std::max<std::int64_t>(1, n / 7))
                CHECK(binomial_tail_exact(n, p, k) == oracle::binomial_tail(n, p, k));
    }
}

TEST_CASE("floating tail within 1e-12 relative of exact up to n = 200")
{
    Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        const auto n = static_cast<std::int64_t>(1 + rng.below(200));
        const auto k = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n) + 2));
        const auto p = ratio(static_cast<long>(1 + rng.below(999)), 1000);
        const double exact = to_double(binomial_tail_exact(n, p, k));
        const double approx = binomial_tail(n, to_double(p), k);
        CAPTURE(n);
        CAPTURE(k);
        if (exact == 0.0) {
            CHECK(approx == 0.0);
        } else {
            CHECK(std::abs(approx - exact) <= 1e-12 * exact);
        }
    }
}

TEST_CASE("floating tail is exact to the last digit for small n")
{
    for (std::int64_t n = 1; n <= 30; ++n)
        for (std::int64_t k = 0; k <= n + 1; ++k) {
            const auto p = ratio(1, 4);
            const double exact = to_double(binomial_tail_exact(n, p, k));
            const double approx = binomial_tail(n, 0.25, k);
            CAPTURE(n);
            CAPTURE(k);
            CHECK(std::abs(approx - exact) <= 2 * std::nextafter(exact, 2.0) - 2 * exact + 1e-300);
        }
}

TEST_CASE("compromise probability")
{
    CHECK(compromise_probability(51, 0.0) == 0.0);
    CHECK(compromise_probability(51, 1.0) == 1.0);
    CHECK_THROWS(compromise_probability(3, 0.1));
    for (std::size_t n : {4, 10, 51, 100}) {
        double last = 0.0;
        for (int j = 0; j <= 100; ++j) {
            const double p = compromise_probability(n, j / 100.0);
            CHECK(p >= last);
            last = p;
        }
    }
    const auto exact = compromise_probability_exact(51, ratio(3, 20));
    CHECK(exact == oracle::binomial_tail(51, ratio(3, 20), 18));
    CHECK(compromise_probability(51, 0.15) == doctest::Approx(to_double(exact)).epsilon(1e-12));
}

TEST_CASE("minimum committee size")
{
    const auto zero = min_committee_size({ratio(1, 1000), 0, 1000});
    REQUIRE(zero);
    CHECK(zero->n == 4);

    const SecurityQuery q{ratio(2, 10000), ratio(3, 20), 1000};
    const auto r = min_committee_size(q);
    REQUIRE(r);
    CHECK(compromise_probability_exact(r->n, q.alpha_a) <= q.epsilon);
    for (std::size_t n = 4; n < r->n; ++n) CHECK(compromise_probability_exact(n, q.alpha_a) > q.epsilon);

    CHECK_FALSE(min_committee_size({ratio(1, 1000000), ratio(34, 100), 2000}));
    CHECK_THROWS(min_committee_size({0, ratio(1, 10), 100}));
    CHECK_THROWS(min_committee_size({ratio(1, 10), 1, 100}));
    CHECK_THROWS(min_committee_size({ratio(1, 10), ratio(1, 10), 3}));
}

TEST_CASE("exact and floating sizing agree past the exact limit")
{
    const auto a = ratio(1, 5);
    for (std::size_t n = kExactSizingLimit - 2; n <= kExactSizingLimit + 2; ++n) {
        const double p = compromise_probability(n, 0.2);
        CHECK(is_secure(n, a, rational_from_double(p * (1 + 1e-9))));
        CHECK_FALSE(is_secure(n, a, rational_from_double(p * (1 - 1e-9))));
    }
}

TEST_CASE("nic conditions")
{
    agents::GameParams g;
    g.reward = 100;
    g.c_mine = 10;
    g.n_tx = 10;
    g.c_val = ratio(1, 100);
    g.phi = 1;
    g.kappa_r = 100;
    const auto ok = nic_check(g, 0, 4, ratio(1, 10));
    CHECK(ok.nic());
    CHECK(ok.fault_margin == 2);
    CHECK(ok.payload_slack == 10 - ratio(1, 100));
    CHECK(ok.reward_slack == 100 - ratio(1, 100) - 1);

    g.reward = ratio(1, 100) + 1;
    const auto tight = nic_check(g, 0, 4, ratio(1, 10));
    CHECK(tight.minimum_reward);
    CHECK(tight.reward_slack == 0);

    CHECK_FALSE(nic_check(g, bft::fault_threshold(4), 4, ratio(1, 10)).fault_tolerance);
    CHECK(nic_check(g, bft::fault_threshold(4) - 1, 4, ratio(1, 10)).fault_tolerance);

    g.phi = 2000;
    CHECK_FALSE(nic_check(g, 0, 4, ratio(1, 10)).maximum_payload);

    g.c_val = 0;
    const auto degenerate = nic_check(g, 0, 4, ratio(1, 10));
    CHECK(degenerate.maximum_payload);
    CHECK(degenerate.degenerate_payload);
}
