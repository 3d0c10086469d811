#include <doctest.h>

#include <array>
#include <cmath>
#include <map>

#include "oracles.hpp"
#include "secretary/error.hpp"
#include "secretary/mallows.hpp"

using namespace secretary;

namespace {

double total_variation(const std::vector<double>& exact, const std::map<std::vector<int>, std::uint64_t>& counts,
                       std::size_t n, std::uint64_t draws)
{
    double tv = 0.0;
    std::size_t k = 0;
    oracle::for_each_permutation(n, [&](const std::vector<int>& p) {
        const auto it = counts.find(p);
        const double freq = it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(draws);
        tv += std::abs(freq - exact[k++]);
    });
    return tv / 2.0;
}

}  // namespace

TEST_CASE("model domain")
{
    CHECK_THROWS_AS(MallowsModel(0, 0.5), DomainError);
    CHECK_THROWS_AS(MallowsModel(3, 0.0), DomainError);
    CHECK_THROWS_AS(MallowsModel(3, 1.5), DomainError);
    CHECK_THROWS_AS(MallowsModel(3, std::nan("")), DomainError);
    CHECK(MallowsModel(1, 0.3).log_normalizer() == 0.0);
    CHECK(MallowsModel(5, 1.0).log_normalizer() == 0.0);
    CHECK(MallowsModel(5, 1.0).is_uniform());
}

TEST_CASE("normalizer equals the summed q-weights")
{
    for (double q : {0.2, 0.5, 0.9}) {
        for (std::size_t n = 1; n <= 6; ++n) {
            double z = 0.0;
            oracle::for_each_permutation(n, [&](const std::vector<int>& p) {
                z += std::pow(q, static_cast<double>(oracle::brute_inversions(p)));
            });
            CHECK(log_mallows_normalizer(n, q) == doctest::Approx(std::log(z)).epsilon(1e-13));
        }
    }
    // Large n with q close to 1 stays finite.
    CHECK(std::isfinite(log_mallows_normalizer(1'000'000, 1.0 - 1e-6)));
}

TEST_CASE("log_pmf examples")
{
    const MallowsModel m(2, 0.5);
    CHECK(log_pmf(m, Permutation{1, 2}) == doctest::Approx(std::log(1.0 / 1.5)).epsilon(1e-15));
    CHECK(log_pmf(m, Permutation{2, 1}) == doctest::Approx(std::log(0.5 / 1.5)).epsilon(1e-15));

    for (std::size_t n : {1u, 3u, 6u, 12u}) {
        const MallowsModel u(n, 1.0);
        CHECK(log_pmf(u, Permutation::identity(n)) == doctest::Approx(-std::lgamma(n + 1.0)).epsilon(1e-15));
    }
    CHECK_THROWS_AS(log_pmf(m, Permutation({1, 2, 3})), DomainError);
}

TEST_CASE("pmf sums to one over S_n")
{
    for (double q : {0.2, 0.5, 0.9, 1.0}) {
        for (std::size_t n = 1; n <= 6; ++n) {
            const MallowsModel model(n, q);
            double total = 0.0;
            oracle::for_each_permutation(n, [&](const std::vector<int>& p) {
                total += std::exp(log_pmf(model, Permutation(p)));
            });
            CHECK(std::abs(total - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("pmf agrees with the direct table")
{
    for (double q : {0.3, 0.8}) {
        const std::size_t n = 5;
        const MallowsModel model(n, q);
        const auto table = oracle::mallows_table(n, q);
        std::size_t k = 0;
        oracle::for_each_permutation(n, [&](const std::vector<int>& p) {
            CHECK(std::exp(log_pmf(model, Permutation(p))) == doctest::Approx(table[k++]).epsilon(1e-12));
        });
    }
}

TEST_CASE("reverse duality P^q(sigma) = P^{1/q}(sigma^rev)")
{
    const std::size_t n = 4;
    for (double q : {0.25, 0.5, 0.8}) {
        const auto forward = oracle::mallows_table(n, q);
        const auto dual = oracle::mallows_table(n, 1.0 / q);
        std::vector<std::vector<int>> perms;
        oracle::for_each_permutation(n, [&](const std::vector<int>& p) { perms.push_back(p); });
        const MallowsModel model(n, q);
        for (std::size_t k = 0; k < perms.size(); ++k) {
            const Permutation rev = reverse(Permutation(perms[k]));
            const auto rev_index = static_cast<std::size_t>(
                std::find(perms.begin(), perms.end(), std::vector<int>(rev.ranks().begin(), rev.ranks().end())) -
                perms.begin());
            CHECK(forward[k] == doctest::Approx(dual[rev_index]).epsilon(1e-12));
            CHECK(std::exp(log_pmf(model, Permutation(perms[k]))) == doctest::Approx(dual[rev_index]).epsilon(1e-12));
        }
    }
}

TEST_CASE("insertion line reproduces the worked example")
{
    const std::array<int, 3> draws{1, 2, 0};  // X_2, X_3, X_4
    CHECK(permutation_from_insertions(draws) == Permutation{3, 2, 1, 4});

    const std::vector<int> zeros(9, 0);
    CHECK(permutation_from_insertions(zeros) == Permutation::identity(10));

    CHECK(permutation_from_insertions(std::vector<int>{}) == Permutation::identity(1));
    // X_j = j-1 everywhere puts each new value leftmost.
    CHECK(permutation_from_insertions(std::vector<int>{1, 2, 3}) == Permutation{4, 3, 2, 1});

    CHECK_THROWS_AS(permutation_from_insertions(std::vector<int>{2}), DomainError);
    CHECK_THROWS_AS(permutation_from_insertions(std::vector<int>{-1}), DomainError);
}

TEST_CASE("inversions equal the sum of insertion draws")
{
    std::uint64_t state = 3;
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 80);
        std::vector<int> draws(n - 1);
        std::uint64_t sum = 0;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            draws[k] = static_cast<int>((state >> 33) % (k + 2));
            sum += static_cast<std::uint64_t>(draws[k]);
        }
        REQUIRE(inversion_count(permutation_from_insertions(draws)) == sum);
    }
}

TEST_CASE("sample_x_j law")
{
    Rng rng(2024);
    SUBCASE("q = 1/2, j = 2: P(0) = 2/3")
    {
        const int draws = 600'000;
        int zeros = 0;
        for (int i = 0; i < draws; ++i)
            zeros += sample_x_j(2, 0.5, rng) == 0 ? 1 : 0;
        const double p = static_cast<double>(zeros) / draws;
        CHECK(std::abs(p - 2.0 / 3.0) < 4.0 * std::sqrt(2.0 / 9.0 / draws));
    }
    SUBCASE("chi-square against the truncated geometric")
    {
        // Critical values of chi-square at the 0.1% level, df = 4 and df = 5.
        const std::map<int, double> critical{{5, 18.467}, {6, 20.515}};
        for (const auto& [j, q] : std::vector<std::pair<int, double>>{{5, 1.0}, {6, 0.7}, {5, 0.95}}) {
            const int draws = 1'000'000;
            std::vector<int> counts(j, 0);
            for (int i = 0; i < draws; ++i) {
                const int x = sample_x_j(j, q, rng);
                REQUIRE(x >= 0);
                REQUIRE(x < j);
                ++counts[x];
            }
            double norm = 0.0;
            for (int m = 0; m < j; ++m)
                norm += std::pow(q, m);
            double chi2 = 0.0;
            for (int m = 0; m < j; ++m) {
                const double expected = draws * std::pow(q, m) / norm;
                chi2 += (counts[m] - expected) * (counts[m] - expected) / expected;
            }
            CHECK(chi2 < critical.at(j));
        }
    }
    SUBCASE("tiny q collapses onto zero")
    {
        for (int i = 0; i < 10000; ++i)
            REQUIRE(sample_x_j(2 + i % 50, 1e-9, rng) == 0);
    }
    CHECK_THROWS_AS(sample_x_j(1, 0.5, rng), DomainError);
    CHECK_THROWS_AS(sample_x_j(3, 0.0, rng), DomainError);
}

TEST_CASE("sampler matches the exact pmf in total variation")
{
    for (std::size_t n : {3u, 4u}) {
        const double q = 0.5;
        const MallowsModel model(n, q);
        Rng rng(99 + n);
        const std::uint64_t draws = 1'000'000;
        std::map<std::vector<int>, std::uint64_t> counts;
        for (std::uint64_t i = 0; i < draws; ++i) {
            const auto p = sample(model, rng);
            ++counts[std::vector<int>(p.ranks().begin(), p.ranks().end())];
        }
        CHECK(total_variation(oracle::mallows_table(n, q), counts, n, draws) < 0.005);
    }
}

TEST_CASE("sampling is reproducible from the seed")
{
    const MallowsModel model(200, 0.97);
    Rng a(5), b(5);
    for (int i = 0; i < 20; ++i)
        REQUIRE(sample(model, a) == sample(model, b));
}

TEST_CASE("q numerically equal to 1 takes the uniform branch")
{
    const MallowsModel model(50, 1.0 - 1e-14);
    Rng rng(8);
    for (int i = 0; i < 100; ++i)
        REQUIRE(sample(model, rng).size() == 50);
}

TEST_CASE("moderate-bias inversion mean")
{
    // q = 1 - c/n^alpha with alpha = 1/2, c = 1: E[I_n]/n^{3/2} -> 1/c.
    const std::size_t n = 10'000;
    const MallowsModel model(n, 1.0 - 1.0 / std::sqrt(static_cast<double>(n)));
    Rng rng(17);
    double total = 0.0;
    for (int i = 0; i < 200; ++i)
        total += static_cast<double>(inversion_count(sample(model, rng))) / std::pow(n, 1.5);
    CHECK(std::abs(total / 200.0 - 1.0) < 0.10);
}
