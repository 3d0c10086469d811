#pragma once

#include <cmath>

// Powers of q in log space. Every q^k used by the library goes through these
// so that 1 - q^k keeps full relative precision when k*|log q| is small.
namespace secretary::numeric {

// q^k given log q.
inline double pow_from_log(double k, double log_q) { return std::exp(k * log_q); }

// 1 - q^k given log q.
inline double one_minus_pow(double k, double log_q) { return -std::expm1(k * log_q); }

// log(1 - q^k) given log q, for k > 0 and log q < 0.
inline double log_one_minus_pow(double k, double log_q)
{
    const double x = k * log_q;
    // log(1 - e^x): expm1 branch near 0, log1p branch for large |x|.
    return x > -0.693147180559945309 ? std::log(-std::expm1(x)) : std::log1p(-std::exp(x));
}

}  // namespace secretary::numeric
