#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "secretary/permutation.hpp"

namespace secretary {

// Random stream used by every stochastic operation. Callers own it and pass
// it explicitly so runs are reproducible from the seed.
using Rng = std::mt19937_64;

// q within this distance of 1 is sampled with the uniform branch.
inline constexpr double kUniformSamplingTolerance = 1e-12;

// Mallows(q) distribution on S_n: P(sigma) = q^inv(sigma) / Z_n(q).
class MallowsModel {
public:
    // Requires n >= 1 and 0 < q <= 1; throws DomainError otherwise.
    MallowsModel(std::size_t n, double q);

    std::size_t n() const { return n_; }
    double q() const { return q_; }
    double log_q() const { return log_q_; }
    bool is_uniform() const { return q_ == 1.0; }

    // log Z_n(q); zero when n <= 1 or q == 1.
    double log_normalizer() const { return log_normalizer_; }

    // True when sample() uses the uniform insertion branch.
    bool samples_uniformly() const { return uniform_sampling_; }

    // 1 - q^j for j = 2..n, indexed by j - 2 (empty when sampling uniformly).
    std::span<const double> insertion_masses() const { return insertion_masses_; }

private:
    std::size_t n_;
    double q_;
    double log_q_;
    double log_normalizer_;
    bool uniform_sampling_;
    std::vector<double> insertion_masses_;
};

// log Z_n(q) = sum_{k=2..n} log(1 - q^k) - (n-1) log(1 - q), for 0 < q < 1.
double log_mallows_normalizer(std::size_t n, double q);

// log P(p); throws DomainError if p.size() != model.n().
double log_pmf(const MallowsModel& model, const Permutation& p);

// One draw of X_j ~ P(X_j = m) = (1-q) q^m / (1 - q^j), m = 0..j-1,
// by inverting the CDF. Uniform on 0..j-1 when q is (numerically) 1.
int sample_x_j(int j, double q, Rng& rng);

// Builds the permutation produced by the insertion line: value j is placed
// with draws[j-2] = X_j previously placed values to its right. `draws` holds
// X_2..X_n, so the result has n = draws.size() + 1 entries and exactly
// sum(draws) inversions. Entries are read left to right, i.e. in arrival order.
Permutation permutation_from_insertions(std::span<const int> draws);

// Exact Mallows sample via independent truncated geometric insertions.
Permutation sample(const MallowsModel& model, Rng& rng);

}  // namespace secretary
