// bessel.hpp - Bessel functions of the first kind by direct power series.
// The solvers only ever need J0, J1, J2 at |x| = G/2omega << 1, where the
// series converges in a handful of terms.

#pragma once

#include <cmath>
#include <stdexcept>

namespace rabi {

struct BesselDomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// J_n(x) = sum_k (-1)^k / (k! (n+k)!) (x/2)^{n+2k}, terms dropped once
/// they fall below 1e-18 in magnitude. Valid (and accepted) for |x| <= 10.
inline double bessel_j(int n, double x) {
    if (n < 0 || n > 8)
        throw BesselDomainError("bessel_j: order must be in [0, 8]");
    if (std::abs(x) > 10.0)
        throw BesselDomainError("bessel_j: |x| > 10 is outside validated range");
    // J_n(-x) = (-1)^n J_n(x)
    const double sign = (x < 0.0 && n % 2 == 1) ? -1.0 : 1.0;
    const double h = std::abs(x) / 2.0;
    double term = 1.0;
    for (int i = 1; i <= n; ++i) term *= h / i;  // h^n / n!
    double sum = term;
    const double h2 = h * h;
    for (int k = 1; std::abs(term) >= 1e-18; ++k) {
        term *= -h2 / (static_cast<double>(k) * (n + k));
        sum += term;
    }
    return sign * sum;
}

}  // namespace rabi
