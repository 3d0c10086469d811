#pragma once

#include <cstddef>

#include "secretary/permutation.hpp"

namespace secretary {

// S(n, m): reject the first m arrivals, then accept the first arrival that
// beats all of them. The last arrival is accepted if nothing qualifies.
class ThresholdStrategy {
public:
    // Requires n >= 1 and 0 <= m <= n-1.
    ThresholdStrategy(std::size_t n, std::size_t m);

    std::size_t n() const { return n_; }
    std::size_t m() const { return m_; }

private:
    std::size_t n_;
    std::size_t m_;
};

struct PlayOutcome {
    std::size_t selected_index;  // 1-based arrival index
    bool success;                // selected item has rank n
};

struct SuccessProbability {
    double value;
    std::size_t n;
    std::size_t m;
    double q;
};

struct OptimalThreshold {
    std::size_t m_star;
    SuccessProbability p_star;
};

PlayOutcome play(const Permutation& p, const ThresholdStrategy& s);

// The event "some j > m has p_j = n and max(p_1..p_{j-1}) = max(p_1..p_m)".
// Independent characterisation of success used to cross-check play().
bool threshold_success_event(const Permutation& p, std::size_t m);

// P_n^q(S(n, m)) under Mallows(q), 0 < q < 1. O(n - m).
SuccessProbability success_probability_exact(std::size_t n, std::size_t m, double q);

// Uniform arrival order (q = 1): (m/n) sum_{j=m+1..n} 1/(j-1), or 1/n for m = 0.
SuccessProbability success_probability_uniform(std::size_t n, std::size_t m);

// Dispatches to the uniform evaluator when q == 1.
SuccessProbability success_probability(std::size_t n, std::size_t m, double q);

// Relative gap below which two success probabilities count as equal.
inline constexpr double kTieTolerance = 1e-13;

// Best threshold within the S(n, m) family for 0 < q <= 1, in O(n).
// Ties (within kTieTolerance) go to the largest m. At q = L/(L+1) the windows
// L and L+1 are exactly tied and this picks n - L.
OptimalThreshold optimal_threshold(std::size_t n, double q);

}  // namespace secretary
