#include <doctest.h>

#include <cmath>

#include "secretary/asymptotics.hpp"
#include "secretary/error.hpp"
#include "secretary/montecarlo.hpp"
#include "secretary/policy.hpp"

using namespace secretary;

namespace {

bool within(const EstimateReport& r, double target, double sigmas)
{
    return std::abs(r.estimate - target) <= sigmas * r.std_error;
}

}  // namespace

TEST_CASE("single item always succeeds")
{
    for (double q : {0.2, 1.0}) {
        const auto r = estimate_success(1, 0, q, 1000, 3);
        CHECK(r.estimate == 1.0);
        CHECK(r.std_error == 0.0);
        CHECK(r.samples == 1000);
    }
}

TEST_CASE("report carries provenance and the binomial standard error")
{
    const auto r = estimate_success(8, 3, 0.6, 5000, 77, 3);
    CHECK(r.base_seed == 77);
    CHECK(r.workers == 3);
    CHECK(r.samples == 5000);
    CHECK(r.std_error == doctest::Approx(std::sqrt(r.estimate * (1.0 - r.estimate) / 5000.0)));
}

TEST_CASE("work split and seed derivation")
{
    std::uint64_t total = 0;
    for (unsigned k = 0; k < 7; ++k)
        total += worker_share(100, 7, k);
    CHECK(total == 100);
    CHECK(worker_share(100, 7, 0) == 15);
    CHECK(worker_share(100, 7, 1) == 15);
    CHECK(worker_share(100, 7, 2) == 14);
    CHECK(worker_share(2, 4, 3) == 0);
    CHECK(worker_seed(10, 0) != worker_seed(10, 1));
    CHECK(worker_seed(10, 1) == worker_seed(11, 0));
}

TEST_CASE("estimates are reproducible from (seed, workers, samples)")
{
    const auto a = estimate_success(30, 10, 0.9, 20000, 123, 1);
    const auto b = estimate_success(30, 10, 0.9, 20000, 123, 1);
    CHECK(a.estimate == b.estimate);
    const auto c = estimate_success(30, 10, 0.9, 20000, 123, 4);
    const auto d = estimate_success(30, 10, 0.9, 20000, 123, 4);
    CHECK(c.estimate == d.estimate);
    const auto e = estimate_inversion_moment(300, 0.8, 500, 1.0, 9, 3);
    const auto f = estimate_inversion_moment(300, 0.8, 500, 1.0, 9, 3);
    CHECK(e.estimate == f.estimate);
    CHECK(e.std_error == f.std_error);
}

TEST_CASE("estimate_success agrees with the exact formula")
{
    const double exact = success_probability_exact(3, 1, 0.5).value;
    CHECK(within(estimate_success(3, 1, 0.5, 1'000'000, 2024, 2), exact, 3.0));

    const auto best = optimal_threshold(100, 0.95);
    CHECK(within(estimate_success(100, best.m_star, 0.95, 100'000, 5, 2), best.p_star.value, 3.0));

    CHECK(within(estimate_success(40, 15, 1.0, 100'000, 6), success_probability_uniform(40, 15).value, 3.0));
}

TEST_CASE("intervals cover the exact value at the nominal rate")
{
    const double exact = success_probability_exact(20, 5, 0.5).value;
    int covered = 0;
    for (std::uint64_t run = 0; run < 100; ++run)
        covered += within(estimate_success(20, 5, 0.5, 10'000, 1000 + run * 7919), exact, 3.0) ? 1 : 0;
    CHECK(covered >= 92);
}

TEST_CASE("inversion moments")
{
    // Strong bias: E[I_n]/n -> q/(1-q).
    auto r = estimate_inversion_moment(2000, 0.5, 200, 1.0, 1);
    CHECK(std::abs(r.estimate - 1.0) < 0.05);

    // Uniform: E[I_n]/n^2 -> 1/4.
    r = estimate_inversion_moment(2000, 1.0, 200, 2.0, 2);
    CHECK(std::abs(r.estimate - 0.25) < 0.02 * 0.25);

    // Weak bias q = 1 - 1/n: E[I_n]/n^2 -> I(1).
    const std::size_t n = 10'000;
    r = estimate_inversion_moment(n, 1.0 - 1.0 / n, 200, 2.0, 3);
    const double limit = inversion_limit_weak(1.0);
    CHECK(std::abs(r.estimate - limit) < 0.10 * limit);

    r = estimate_inversion_moment(10, 0.5, 1, 1.0, 4);
    CHECK(r.std_error == 0.0);
}

TEST_CASE("domain errors")
{
    CHECK_THROWS_AS(estimate_success(5, 2, 0.5, 0, 1), DomainError);
    CHECK_THROWS_AS(estimate_success(5, 2, 0.5, 10, 1, 0), DomainError);
    CHECK_THROWS_AS(estimate_success(5, 5, 0.5, 10, 1), DomainError);
    CHECK_THROWS_AS(estimate_success(5, 2, 1.2, 10, 1), DomainError);
    CHECK_THROWS_AS(estimate_inversion_moment(5, 0.0, 10, 1.0, 1), DomainError);
}
