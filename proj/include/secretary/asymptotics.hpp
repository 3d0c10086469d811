#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace secretary {

enum class Regime { weak, moderate, strong };

std::string_view to_string(Regime r);
// Throws DomainError for anything other than "weak", "moderate", "strong".
Regime parse_regime(std::string_view name);

// Bias regime and its parameters:
//   weak      q_n = 1 - c/n
//   moderate  q_n = 1 - c/n^alpha, 0 < alpha < 1
//   strong    fixed q in (0, 1)
class RegimeSpec {
public:
    static RegimeSpec weak(double c);
    static RegimeSpec moderate(double c, double alpha);
    static RegimeSpec strong(double q);

    Regime kind() const { return kind_; }
    // Present exactly when the regime uses them.
    std::optional<double> c() const { return c_; }
    std::optional<double> alpha() const { return alpha_; }
    std::optional<double> q() const { return q_; }

    // The Mallows parameter this regime prescribes at size n.
    double q_at(std::size_t n) const;

private:
    RegimeSpec(Regime kind, std::optional<double> c, std::optional<double> alpha, std::optional<double> q)
        : kind_(kind), c_(c), alpha_(alpha), q_(q)
    {
    }

    Regime kind_;
    std::optional<double> c_;
    std::optional<double> alpha_;
    std::optional<double> q_;
};

/// Limiting optimal rejected fraction under weak bias,
/// b*(c) = (1/c) log(1 + (e^c - 1)/e). Tends to 1/e as c -> 0 and 1 as c -> inf.
double weak_threshold_fraction(double c);

/// Limiting success probability under weak bias when M_n ~ b n:
///   c e^{-c} (e^{bc} - 1) / (1 - e^{-c}) * (1 - b + (1/c) log((1 - e^{-c}) / (1 - e^{-bc}))).
/// Maximised at b = weak_threshold_fraction(c), where it equals 1/e.
double weak_limit_objective(double b, double c);

/// L_n* = -1 / log(1 - c n^{-alpha}), the asymptotic window n - M_n* under
/// moderate bias (~ n^alpha / c). Requires c n^{-alpha} < 1.
double moderate_window(std::size_t n, double alpha, double c);

/// The unique L >= 1 with (L-1)/L < q <= L/(L+1).
///
/// A double that is the correctly rounded value of L/(L+1) is classified as
/// L, so the upper boundary is inclusive for the representable boundary
/// values as well as for exact ones (0.9 -> 9, 2/3 -> 2).
int strong_window(double q);

/// (1 - q) q^{L-1} L with L = strong_window(q): limiting optimal success
/// probability under strong bias. Exceeds 1/e on (0, 1); equals 1 - q for q <= 1/2.
double strong_limit_probability(double q);

/// I(c) = (1/c^2) int_0^{1-e^{-c}} (1/(1-x) + log(1-x)/x) dx, the weak-bias
/// limit of E[inversions]/n^2. Evaluated by adaptive Gauss-Kronrod quadrature
/// to absolute accuracy 1e-10; throws ConvergenceError if that is not reached.
double inversion_limit_weak(double c);

// The integrand of I(c) in x, with its limit 0 substituted for x < 1e-12.
double inversion_limit_integrand(double x);

struct Prediction {
    std::size_t m_star;
    double p_limit;
};

// Asymptotically optimal threshold at size n and its limiting success
// probability. Rounding of non-integer thresholds is half-to-even.
Prediction predict(const RegimeSpec& spec, std::size_t n);

}  // namespace secretary
