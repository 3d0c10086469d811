#include "secretary/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "secretary/error.hpp"
#include "secretary/mallows.hpp"
#include "secretary/policy.hpp"

namespace secretary {

namespace {

void check_run(std::uint64_t samples, unsigned workers)
{
    if (samples < 1)
        throw DomainError("samples must be at least 1");
    if (workers < 1)
        throw DomainError("workers must be at least 1");
}

// Runs body(worker, share, rng) for every worker, one thread each beyond the
// first; worker 0 runs on the calling thread.
template <class Body>
void for_each_worker(std::uint64_t samples, std::uint64_t base_seed, unsigned workers, Body&& body)
{
    std::vector<std::jthread> threads;
    threads.reserve(workers - 1);
    for (unsigned k = 1; k < workers; ++k) {
        threads.emplace_back([&, k] {
            Rng rng(worker_seed(base_seed, k));
            body(k, worker_share(samples, workers, k), rng);
        });
    }
    Rng rng(worker_seed(base_seed, 0));
    body(0u, worker_share(samples, workers, 0), rng);
}

}  // namespace

std::uint64_t worker_seed(std::uint64_t base_seed, unsigned worker)
{
    std::uint64_t z = base_seed + worker + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t worker_share(std::uint64_t samples, unsigned workers, unsigned worker)
{
    return samples / workers + (worker < samples % workers ? 1 : 0);
}

EstimateReport estimate_success(std::size_t n, std::size_t m, double q, std::uint64_t samples,
                                std::uint64_t base_seed, unsigned workers)
{
    check_run(samples, workers);
    const MallowsModel model(n, q);
    const ThresholdStrategy strategy(n, m);

    std::vector<std::uint64_t> successes(workers, 0);
    for_each_worker(samples, base_seed, workers, [&](unsigned k, std::uint64_t share, Rng& rng) {
        std::uint64_t hits = 0;
        for (std::uint64_t i = 0; i < share; ++i)
            hits += play(sample(model, rng), strategy).success ? 1 : 0;
        successes[k] = hits;
    });

    std::uint64_t total = 0;
    for (const auto s : successes)
        total += s;
    const double p = static_cast<double>(total) / static_cast<double>(samples);
    return {p, samples, std::sqrt(p * (1.0 - p) / static_cast<double>(samples)), base_seed, workers};
}

EstimateReport estimate_inversion_moment(std::size_t n, double q, std::uint64_t samples, double scaling_exponent,
                                         std::uint64_t base_seed, unsigned workers)
{
    check_run(samples, workers);
    if (!std::isfinite(scaling_exponent))
        throw DomainError("scaling exponent must be finite");
    const MallowsModel model(n, q);
    const double scale = std::pow(static_cast<double>(n), scaling_exponent);

    struct Moments {
        double sum = 0.0;
        double sum_sq = 0.0;
    };
    std::vector<Moments> partial(workers);
    for_each_worker(samples, base_seed, workers, [&](unsigned k, std::uint64_t share, Rng& rng) {
        Moments acc;
        for (std::uint64_t i = 0; i < share; ++i) {
            const double v = static_cast<double>(inversion_count(sample(model, rng))) / scale;
            acc.sum += v;
            acc.sum_sq += v * v;
        }
        partial[k] = acc;
    });

    // Combined in worker order so the result does not depend on scheduling.
    Moments total;
    for (const auto& p : partial) {
        total.sum += p.sum;
        total.sum_sq += p.sum_sq;
    }
    const double count = static_cast<double>(samples);
    const double mean = total.sum / count;
    double std_error = 0.0;
    if (samples > 1) {
        const double variance = std::max(0.0, (total.sum_sq - count * mean * mean) / (count - 1.0));
        std_error = std::sqrt(variance / count);
    }
    return {mean, samples, std_error, base_seed, workers};
}

}  // namespace secretary
