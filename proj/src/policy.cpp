#include "secretary/policy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "secretary/error.hpp"
#include "secretary/numeric.hpp"

namespace secretary {

namespace {

void check_threshold(std::size_t n, std::size_t m)
{
    if (n < 1)
        throw DomainError("n must be at least 1");
    if (m >= n)
        throw DomainError("m must lie in [0, n-1], got m = " + std::to_string(m) + " for n = " + std::to_string(n));
}

void check_open_q(double q)
{
    if (!(q > 0.0 && q < 1.0))
        throw DomainError("q must lie in (0, 1) for the Mallows evaluator, got " + std::to_string(q) +
                          " (use the uniform evaluator for q = 1)");
}

double clamp_probability(double v) { return std::clamp(v, 0.0, 1.0); }

bool beats(double candidate, double incumbent)
{
    return candidate > incumbent + kTieTolerance * std::abs(incumbent);
}

// log of (1-q)/(1-q^n) q^{n-m-1} (1-q^m) for m >= 1.
double log_prefactor(std::size_t n, std::size_t m, double log_q, double log_one_minus_q, double log_one_minus_qn)
{
    return log_one_minus_q - log_one_minus_qn + static_cast<double>(n - m - 1) * log_q +
           numeric::log_one_minus_pow(static_cast<double>(m), log_q);
}

// (1-q) q^{n-1} / (1-q^n): the first arrival is the best.
double first_is_best(std::size_t n, double log_q, double log_one_minus_q, double log_one_minus_qn)
{
    return std::exp(log_one_minus_q - log_one_minus_qn + static_cast<double>(n - 1) * log_q);
}

}  // namespace

ThresholdStrategy::ThresholdStrategy(std::size_t n, std::size_t m) : n_(n), m_(m) { check_threshold(n, m); }

PlayOutcome play(const Permutation& p, const ThresholdStrategy& s)
{
    const std::size_t n = p.size();
    if (n != s.n())
        throw DomainError("permutation length " + std::to_string(n) + " does not match strategy n = " +
                          std::to_string(s.n()));
    const auto best = static_cast<int>(n);
    const std::size_t m = s.m();
    if (m == 0)
        return {1, p[0] == best};

    const int benchmark = *std::max_element(p.ranks().begin(), p.ranks().begin() + static_cast<std::ptrdiff_t>(m));
    std::size_t selected = n;
    for (std::size_t j = m; j < n; ++j) {
        if (p[j] > benchmark) {
            selected = j + 1;
            break;
        }
    }
    return {selected, p[selected - 1] == best};
}

bool threshold_success_event(const Permutation& p, std::size_t m)
{
    const std::size_t n = p.size();
    if (m >= n)
        throw DomainError("m must lie in [0, n-1]");
    if (m == 0)
        return p[0] == static_cast<int>(n);
    int prefix_max = 0;
    int head_max = 0;
    for (std::size_t j = 0; j < n; ++j) {
        // prefix_max = max(p_1..p_j) in 1-based terms before this update.
        if (j >= m && p[j] == static_cast<int>(n) && prefix_max == head_max)
            return true;
        prefix_max = std::max(prefix_max, p[j]);
        if (j < m)
            head_max = prefix_max;
    }
    return false;
}

SuccessProbability success_probability_exact(std::size_t n, std::size_t m, double q)
{
    check_threshold(n, m);
    check_open_q(q);
    if (n == 1)
        return {1.0, n, m, q};

    const double log_q = std::log(q);
    const double log_one_minus_q = std::log1p(-q);
    const double log_one_minus_qn = numeric::log_one_minus_pow(static_cast<double>(n), log_q);
    if (m == 0)
        return {clamp_probability(first_is_best(n, log_q, log_one_minus_q, log_one_minus_qn)), n, m, q};

    // Summed from j = n downward so optimal_threshold's running sum matches bit for bit.
    double sum = 0.0;
    for (std::size_t j = n; j >= m + 1; --j)
        sum += 1.0 / numeric::one_minus_pow(static_cast<double>(j - 1), log_q);
    const double value = std::exp(log_prefactor(n, m, log_q, log_one_minus_q, log_one_minus_qn)) * sum;
    return {clamp_probability(value), n, m, q};
}

SuccessProbability success_probability_uniform(std::size_t n, std::size_t m)
{
    check_threshold(n, m);
    if (m == 0)
        return {1.0 / static_cast<double>(n), n, m, 1.0};
    double sum = 0.0;
    for (std::size_t j = n; j >= m + 1; --j)
        sum += 1.0 / static_cast<double>(j - 1);
    const double value = static_cast<double>(m) / static_cast<double>(n) * sum;
    return {clamp_probability(value), n, m, 1.0};
}

SuccessProbability success_probability(std::size_t n, std::size_t m, double q)
{
    if (q == 1.0)
        return success_probability_uniform(n, m);
    return success_probability_exact(n, m, q);
}

OptimalThreshold optimal_threshold(std::size_t n, double q)
{
    if (n < 1)
        throw DomainError("n must be at least 1");
    if (!(q > 0.0 && q <= 1.0))
        throw DomainError("q must lie in (0, 1], got " + std::to_string(q));
    if (n == 1)
        return {0, success_probability(1, 0, q)};

    const bool uniform = q == 1.0;
    const double log_q = uniform ? 0.0 : std::log(q);
    const double log_one_minus_q = uniform ? 0.0 : std::log1p(-q);
    const double log_one_minus_qn =
        uniform ? 0.0 : numeric::log_one_minus_pow(static_cast<double>(n), log_q);

    // Walk m downward so that sum_{j=m+1..n} grows by one term per step.
    // A smaller m must win by more than the tie tolerance to replace the
    // current best, so ties go to the larger m.
    std::size_t best_m = n - 1;
    double best_value = -1.0;
    double sum = 0.0;
    for (std::size_t m = n - 1; m >= 1; --m) {
        double value = 0.0;
        if (uniform) {
            sum += 1.0 / static_cast<double>(m);
            value = static_cast<double>(m) / static_cast<double>(n) * sum;
        } else {
            sum += 1.0 / numeric::one_minus_pow(static_cast<double>(m), log_q);
            value = std::exp(log_prefactor(n, m, log_q, log_one_minus_q, log_one_minus_qn)) * sum;
        }
        value = clamp_probability(value);
        if (beats(value, best_value)) {
            best_value = value;
            best_m = m;
        }
    }
    const double first = uniform ? 1.0 / static_cast<double>(n)
                                 : clamp_probability(first_is_best(n, log_q, log_one_minus_q, log_one_minus_qn));
    if (beats(first, best_value)) {
        best_value = first;
        best_m = 0;
    }
    return {best_m, {best_value, n, best_m, q}};
}

}  // namespace secretary
