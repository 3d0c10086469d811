#pragma once

#include <cstddef>
#include <cstdint>

namespace secretary {

// Monte Carlo estimate with its provenance. Reproducible bit for bit from
// (base_seed, workers, samples).
struct EstimateReport {
    double estimate;
    std::uint64_t samples;
    double std_error;
    std::uint64_t base_seed;
    unsigned workers;
};

// Seed of worker k's stream: splitmix64(base_seed + k).
std::uint64_t worker_seed(std::uint64_t base_seed, unsigned worker);

// Samples assigned to worker k: an even split, remainder to the lowest indices.
std::uint64_t worker_share(std::uint64_t samples, unsigned workers, unsigned worker);

// Frequency with which S(n, m) picks the best item over `samples` Mallows(q)
// arrival orders. std_error = sqrt(p(1-p)/samples).
EstimateReport estimate_success(std::size_t n, std::size_t m, double q, std::uint64_t samples,
                                std::uint64_t base_seed, unsigned workers = 1);

// Mean of inversions / n^scaling_exponent over `samples` Mallows(q) draws;
// std_error is the sample standard deviation over sqrt(samples).
EstimateReport estimate_inversion_moment(std::size_t n, double q, std::uint64_t samples, double scaling_exponent,
                                         std::uint64_t base_seed, unsigned workers = 1);

}  // namespace secretary
