// entropy.hpp - Entropies of small density matrices. 2x2 spectra are
// obtained in closed form; 0 ln 0 is taken as 0 throughout.

#pragma once

#include <cmath>
#include <complex>

namespace rabi {

inline double xlnx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

/// Eigenvalues of a unit-trace Hermitian 2x2 matrix with diagonal
/// (1 - p_e, p_e) and off-diagonal coherence c.
inline void eigenvalues_2x2(double p_e, std::complex<double> c, double& lo,
                            double& hi) {
    const double d = std::sqrt((2.0 * p_e - 1.0) * (2.0 * p_e - 1.0) +
                               4.0 * std::norm(c));
    lo = 0.5 * (1.0 - d);
    hi = 0.5 * (1.0 + d);
}

/// Von Neumann entropy (nats) of the same matrix.
inline double von_neumann_2x2(double p_e, std::complex<double> c) {
    double lo, hi;
    eigenvalues_2x2(p_e, c, lo, hi);
    return -(xlnx(lo) + xlnx(hi));
}

/// Linear entropy 1 - Tr(rho^2) of the same matrix.
inline double linear_entropy_2x2(double p_e, std::complex<double> c) {
    const double p_g = 1.0 - p_e;
    return 1.0 - (p_g * p_g + p_e * p_e + 2.0 * std::norm(c));
}

}  // namespace rabi
