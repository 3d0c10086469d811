#include "secretary/asymptotics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "secretary/error.hpp"

namespace secretary {

namespace {

constexpr double kInvE = 0.36787944117144232160;  // 1/e

void check_c(double c)
{
    if (!(c > 0.0) || !std::isfinite(c))
        throw DomainError("c must be a positive finite number, got " + std::to_string(c));
}

void check_open_unit(double v, const char* name)
{
    if (!(v > 0.0 && v < 1.0))
        throw DomainError(std::string(name) + " must lie in (0, 1), got " + std::to_string(v));
}

// e^u - 1 - u without cancellation, for 0 <= u <= 0.1.
double expm1_minus_identity(double u)
{
    double term = u * u / 2.0;
    double sum = 0.0;
    for (int k = 3; k < 16; ++k) {
        sum += term;
        term *= u / k;
    }
    return sum;
}

}  // namespace

std::string_view to_string(Regime r)
{
    switch (r) {
    case Regime::weak: return "weak";
    case Regime::moderate: return "moderate";
    case Regime::strong: return "strong";
    }
    return "unknown";
}

Regime parse_regime(std::string_view name)
{
    if (name == "weak")
        return Regime::weak;
    if (name == "moderate")
        return Regime::moderate;
    if (name == "strong")
        return Regime::strong;
    throw DomainError("unknown regime '" + std::string(name) + "' (expected weak, moderate or strong)");
}

RegimeSpec RegimeSpec::weak(double c)
{
    check_c(c);
    return RegimeSpec(Regime::weak, c, std::nullopt, std::nullopt);
}

RegimeSpec RegimeSpec::moderate(double c, double alpha)
{
    check_c(c);
    check_open_unit(alpha, "alpha");
    return RegimeSpec(Regime::moderate, c, alpha, std::nullopt);
}

RegimeSpec RegimeSpec::strong(double q)
{
    check_open_unit(q, "q");
    return RegimeSpec(Regime::strong, std::nullopt, std::nullopt, q);
}

double RegimeSpec::q_at(std::size_t n) const
{
    if (n < 1)
        throw DomainError("n must be at least 1");
    const double nn = static_cast<double>(n);
    double q = 0.0;
    switch (kind_) {
    case Regime::weak: q = 1.0 - *c_ / nn; break;
    case Regime::moderate: q = 1.0 - *c_ * std::pow(nn, -*alpha_); break;
    case Regime::strong: return *q_;
    }
    if (!(q > 0.0 && q < 1.0))
        throw DomainError("regime parameters give q = " + std::to_string(q) + " outside (0, 1) at n = " +
                          std::to_string(n));
    return q;
}

double weak_threshold_fraction(double c)
{
    check_c(c);
    if (c <= 1.0)
        return std::log1p(std::expm1(c) / std::numbers::e) / c;
    // 1 + (e^c - 1)/e = e^{c-1} (1 + (e - 1) e^{-c}); avoids overflow of e^c.
    return (c - 1.0 + std::log1p((std::numbers::e - 1.0) * std::exp(-c))) / c;
}

double weak_limit_objective(double b, double c)
{
    check_open_unit(b, "b");
    check_c(c);
    // c e^{-c} (e^{bc} - 1) = c e^{-(1-b)c} (1 - e^{-bc}).
    const double one_minus_e_bc = -std::expm1(-b * c);
    const double one_minus_e_c = -std::expm1(-c);
    const double prefactor = c * std::exp(-(1.0 - b) * c) * one_minus_e_bc / one_minus_e_c;
    const double tail = 1.0 - b + (std::log(one_minus_e_c) - std::log(one_minus_e_bc)) / c;
    return prefactor * tail;
}

double moderate_window(std::size_t n, double alpha, double c)
{
    if (n < 1)
        throw DomainError("n must be at least 1");
    check_open_unit(alpha, "alpha");
    check_c(c);
    const double x = c * std::pow(static_cast<double>(n), -alpha);
    if (!(x < 1.0))
        throw DomainError("moderate regime needs c * n^-alpha < 1, got " + std::to_string(x));
    return -1.0 / std::log1p(-x);
}

int strong_window(double q)
{
    check_open_unit(q, "q");
    const auto upper = [](double l) { return l / (l + 1.0); };
    // ceil(q/(1-q)) is within one of the answer; settle it against the
    // rounded boundaries L/(L+1) directly.
    double l = std::ceil(q / (1.0 - q));
    if (l < 1.0)
        l = 1.0;
    while (l > 1.0 && q <= upper(l - 1.0))
        l -= 1.0;
    while (q > upper(l))
        l += 1.0;
    if (l > static_cast<double>(std::numeric_limits<int>::max()))
        throw DomainError("q too close to 1 for a strong-regime window");
    return static_cast<int>(l);
}

double strong_limit_probability(double q)
{
    const int window = strong_window(q);
    return (1.0 - q) * std::exp(static_cast<double>(window - 1) * std::log(q)) * static_cast<double>(window);
}

double inversion_limit_integrand(double x)
{
    if (x < 1e-12)
        return 0.0;
    return 1.0 / (1.0 - x) + std::log1p(-x) / x;
}

double inversion_limit_weak(double c)
{
    check_c(c);
    // Integrated in u = -log(1 - x), which maps the integrand to
    // g(u) = 1 - u/(e^u - 1) on [0, c] and removes the 1/(1-x) growth at the
    // top end. With u = c t, I(c) = int_0^1 g(c t)/c dt, whose integrand is
    // O(1) for every c.
    const auto g = [](double u) {
        if (u < 1e-12)
            return 0.0;
        if (u > 0.1)
            return 1.0 - u * std::exp(-u) / -std::expm1(-u);
        return expm1_minus_identity(u) / std::expm1(u);
    };
    const auto integrand = [&](double t) { return g(c * t) / c; };
    constexpr double kAbsTolerance = 1e-10;
    double error = 0.0;
    double l1 = 0.0;
    const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, 0.0, 1.0, 20, 1e-12, &error, &l1);
    if (!std::isfinite(integral) || !(error <= kAbsTolerance)) {
        std::ostringstream msg;
        msg << "I(c) quadrature did not converge: c = " << c << ", integral = " << integral
            << ", error estimate = " << error << " (target " << kAbsTolerance << ")";
        throw ConvergenceError(msg.str());
    }
    return integral;
}

Prediction predict(const RegimeSpec& spec, std::size_t n)
{
    if (n < 1)
        throw DomainError("n must be at least 1");
    const double nn = static_cast<double>(n);
    switch (spec.kind()) {
    case Regime::weak: {
        const double m = std::nearbyint(nn * weak_threshold_fraction(*spec.c()));
        return {static_cast<std::size_t>(std::min(m, nn - 1.0)), kInvE};
    }
    case Regime::moderate: {
        const double window = std::nearbyint(moderate_window(n, *spec.alpha(), *spec.c()));
        const double m = std::max(nn - std::max(window, 1.0), 0.0);
        return {static_cast<std::size_t>(m), kInvE};
    }
    case Regime::strong: {
        const auto window = static_cast<std::size_t>(strong_window(*spec.q()));
        return {n > window ? n - window : 0, strong_limit_probability(*spec.q())};
    }
    }
    throw DomainError("unknown regime");
}

}  // namespace secretary
