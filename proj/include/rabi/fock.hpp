// fock.hpp - Fock-window truncation of a coherent state and the joint
// qubit-field state layout used by the QRM solvers.

#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <vector>

#include "rabi/params.hpp"

namespace rabi {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

/// Contiguous range of retained Fock indices [n1, n2].
struct FockWindow {
    long n1 = 0;
    long n2 = 0;

    long width() const { return n2 - n1 + 1; }

    bool operator==(const FockWindow&) const = default;
};

/// Log of the coherent-state amplitude, ln|<n|alpha>| = (-a^2 + n ln a^2
/// - ln n!)/2. Evaluated in log space so it stays finite at n ~ 4e4.
inline double log_coherent_amplitude(double alpha, long n) {
    const double a2 = alpha * alpha;
    if (a2 == 0.0) return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    return 0.5 * (-a2 + static_cast<double>(n) * std::log(a2) -
                  std::lgamma(static_cast<double>(n) + 1.0));
}

/// Smallest window containing round(alpha^2) whose out-of-window neighbours
/// n1-1 (unless n1 = 0) and n2+1 have coherent amplitude below `cutoff`.
inline FockWindow build_window(double alpha, double cutoff) {
    if (alpha < 0.0) throw ParameterError("build_window: alpha must be >= 0");
    if (!(cutoff > 0.0 && cutoff < 1.0))
        throw ParameterError("build_window: cutoff must lie in (0, 1)");
    const double log_cut = std::log(cutoff);
    const long center = std::lround(alpha * alpha);
    long n1 = center;
    while (n1 > 0 && log_coherent_amplitude(alpha, n1 - 1) >= log_cut) --n1;
    long n2 = center;
    while (log_coherent_amplitude(alpha, n2 + 1) >= log_cut) ++n2;
    return {n1, n2};
}

/// Coherent amplitudes <n|alpha> restricted to the window, renormalized.
/// `discarded_mass`, when given, receives the probability outside the window.
inline cvec coherent_amplitudes(double alpha, const FockWindow& w,
                                double* discarded_mass = nullptr) {
    cvec amps(w.width());
    double norm_sq = 0.0;
    for (long n = w.n1; n <= w.n2; ++n) {
        const double a = std::exp(log_coherent_amplitude(alpha, n));
        amps[n - w.n1] = a;
        norm_sq += a * a;
    }
    if (discarded_mass) *discarded_mass = 1.0 - norm_sq;
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& a : amps) a *= inv;
    return amps;
}

/// Pure joint state over (qubit collective level) x (Fock index), stored
/// row-major: amplitudes[level * width + (n - n1)]. For N identical qubits
/// the level index k counts collective excitations (Dicke ladder, k = 0..N).
struct JointState {
    FockWindow window;
    int n_levels = 2;
    cvec amplitudes;
    double frame_time = 0.0;

    cplx& at(int level, long n) {
        return amplitudes[static_cast<size_t>(level) * window.width() +
                          (n - window.n1)];
    }
    const cplx& at(int level, long n) const {
        return amplitudes[static_cast<size_t>(level) * window.width() +
                          (n - window.n1)];
    }

    double norm_sq() const {
        double s = 0.0;
        for (const auto& a : amplitudes) s += std::norm(a);
        return s;
    }

    /// Probability on the 5 lowest plus 5 highest Fock indices of the
    /// window. The vacuum is a physical boundary, so the lower edge only
    /// counts when the window starts above n = 0.
    double boundary_leakage() const {
        const long W = window.width();
        const long edge = std::min<long>(5, W);
        double s = 0.0;
        for (int k = 0; k < n_levels; ++k) {
            const cplx* row = amplitudes.data() + static_cast<size_t>(k) * W;
            if (window.n1 > 0)
                for (long j = 0; j < edge; ++j) s += std::norm(row[j]);
            for (long j = std::max<long>(W - edge, edge); j < W; ++j)
                s += std::norm(row[j]);
        }
        return s;
    }
};

/// |g...g> (x) |alpha>, all qubits in the collective ground level.
inline JointState initial_joint_state(const ModelParams& params,
                                      const FockWindow& window) {
    params.validate();
    JointState st;
    st.window = window;
    st.n_levels = params.n_qubits + 1;
    st.amplitudes.assign(static_cast<size_t>(st.n_levels) * window.width(),
                         cplx{0.0, 0.0});
    const cvec field = coherent_amplitudes(params.alpha, window);
    std::copy(field.begin(), field.end(), st.amplitudes.begin());
    return st;
}

}  // namespace rabi
