#include "secretary/mallows.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "secretary/detail/fenwick.hpp"
#include "secretary/error.hpp"
#include "secretary/numeric.hpp"

namespace secretary {

namespace {

void check_q(double q)
{
    if (!(q > 0.0 && q <= 1.0))
        throw DomainError("q must lie in (0, 1], got " + std::to_string(q));
}

// m = floor(log(1 - U (1 - q^j)) / log q), clamped to [0, j-1].
int invert_truncated_geometric(int j, double mass, double inv_log_q, Rng& rng)
{
    // Top 53 bits of one 64-bit draw: uniform on [0, 1) on a 2^-53 grid.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double m = std::floor(std::log1p(-u * mass) * inv_log_q);
    if (!(m >= 0.0))
        return 0;
    return m >= j - 1 ? j - 1 : static_cast<int>(m);
}

int uniform_insertion(int j, Rng& rng) { return std::uniform_int_distribution<int>(0, j - 1)(rng); }

bool near_one(double q) { return 1.0 - q < kUniformSamplingTolerance; }

}  // namespace

double log_mallows_normalizer(std::size_t n, double q)
{
    check_q(q);
    if (n <= 1 || q == 1.0)
        return 0.0;
    const double log_q = std::log(q);
    double s = 0.0;
    for (std::size_t k = 2; k <= n; ++k)
        s += numeric::log_one_minus_pow(static_cast<double>(k), log_q);
    return s - static_cast<double>(n - 1) * std::log1p(-q);
}

MallowsModel::MallowsModel(std::size_t n, double q) : n_(n), q_(q)
{
    if (n < 1)
        throw DomainError("n must be at least 1");
    check_q(q);
    log_q_ = std::log(q);
    log_normalizer_ = log_mallows_normalizer(n, q);
    uniform_sampling_ = near_one(q);
    if (!uniform_sampling_) {
        insertion_masses_.resize(n - 1);
        for (std::size_t j = 2; j <= n; ++j)
            insertion_masses_[j - 2] = numeric::one_minus_pow(static_cast<double>(j), log_q_);
    }
}

double log_pmf(const MallowsModel& model, const Permutation& p)
{
    if (p.size() != model.n())
        throw DomainError("permutation length " + std::to_string(p.size()) + " does not match n = " +
                          std::to_string(model.n()));
    if (model.is_uniform())
        return -std::lgamma(static_cast<double>(model.n()) + 1.0);
    return static_cast<double>(inversion_count(p)) * model.log_q() - model.log_normalizer();
}

int sample_x_j(int j, double q, Rng& rng)
{
    if (j < 2)
        throw DomainError("sample_x_j requires j >= 2");
    check_q(q);
    if (near_one(q))
        return uniform_insertion(j, rng);
    const double log_q = std::log(q);
    return invert_truncated_geometric(j, numeric::one_minus_pow(j, log_q), 1.0 / log_q, rng);
}

namespace {

// Below this size shifting a contiguous line beats the order-statistics tree.
constexpr std::size_t kDirectInsertionLimit = 256;

Permutation place_insertions(std::span<const int> draws)
{
    const std::size_t n = draws.size() + 1;
    std::vector<int> ranks;
    if (n <= kDirectInsertionLimit) {
        ranks.reserve(n);
        ranks.push_back(1);
        for (std::size_t j = 2; j <= n; ++j)
            ranks.insert(ranks.end() - draws[j - 2], static_cast<int>(j));
        return permutation_from_trusted(std::move(ranks));
    }

    // When j is inserted it sits at index (j-1) - X_j among 1..j. Larger values
    // inserted later only shift it, so walking j = n..1 and taking that index
    // among the still-free final slots recovers the final line.
    ranks.resize(n);
    auto free_slots = detail::FenwickTree::filled(n, 1);
    for (std::size_t j = n; j >= 1; --j) {
        const std::int64_t offset = j >= 2 ? static_cast<std::int64_t>(j - 1) - draws[j - 2] : 0;
        const std::size_t slot = free_slots.find_kth(offset);
        ranks[slot] = static_cast<int>(j);
        free_slots.add(slot, -1);
    }
    return permutation_from_trusted(std::move(ranks));
}

}  // namespace

Permutation permutation_from_insertions(std::span<const int> draws)
{
    for (std::size_t k = 0; k < draws.size(); ++k) {
        const auto j = static_cast<int>(k + 2);
        if (draws[k] < 0 || draws[k] > j - 1)
            throw DomainError("X_" + std::to_string(j) + " must lie in [0, " + std::to_string(j - 1) + "]");
    }
    return place_insertions(draws);
}

Permutation sample(const MallowsModel& model, Rng& rng)
{
    const std::size_t n = model.n();
    std::vector<int> draws(n - 1);
    if (model.samples_uniformly()) {
        for (std::size_t k = 0; k + 1 < n; ++k)
            draws[k] = uniform_insertion(static_cast<int>(k + 2), rng);
    } else {
        const auto masses = model.insertion_masses();
        const double inv_log_q = 1.0 / model.log_q();
        for (std::size_t k = 0; k + 1 < n; ++k)
            draws[k] = invert_truncated_geometric(static_cast<int>(k + 2), masses[k], inv_log_q, rng);
    }
    return place_insertions(draws);
}

}  // namespace secretary
