// params.hpp - Physical parameters shared by all solvers. All quantities
// are expressed in units of the cavity/drive frequency omega (fixed to 1).

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace rabi {

struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateSpectrumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Model parameters. `Delta = omega - Omega` is the detuning; `G` is the
/// semiclassical Rabi frequency, tied to the quantum parameters through
/// G = 2*g*alpha. `delta_flag` toggles the counter-rotating terms
/// (1 = complete model, 0 = RWA).
struct ModelParams {
    double omega = 1.0;      // cavity/drive frequency, the unit
    double Delta = 0.0;      // detuning omega - Omega
    double G = 0.0;          // semiclassical Rabi frequency
    double g = 0.0;          // one-photon coupling
    double alpha = 0.0;      // coherent amplitude (real)
    int n_qubits = 1;
    int delta_flag = 1;
    double gamma = 0.0;      // qubit damping rate
    double gamma_phi = 0.0;  // pure dephasing rate
    double kappa = 0.0;      // cavity damping rate
    double n_th = 0.0;       // thermal occupation at the qubit frequency
    double n_c = 0.0;        // thermal occupation at the cavity frequency

    double Omega() const { return omega - Delta; }

    /// Resonant SRM with pi-pulse duration T_pi (so G = pi / T_pi).
    static ModelParams srm_pi_pulse(double t_pi) {
        ModelParams p;
        p.G = M_PI / t_pi;
        return p;
    }

    /// QRM with alpha from alpha^2 and g fixed through g*alpha = g_alpha
    /// (the default keeps g*alpha/omega = 1e-2*pi, i.e. omega*T_pi = 50).
    static ModelParams qrm(double alpha_sq, double g_alpha = 1e-2 * M_PI,
                           int n_qubits = 1) {
        ModelParams p;
        p.alpha = std::sqrt(alpha_sq);
        p.g = g_alpha / p.alpha;
        p.G = 2.0 * p.g * p.alpha;
        p.n_qubits = n_qubits;
        return p;
    }

    void validate() const {
        if (omega != 1.0)
            throw ParameterError("omega is the unit of frequency; it must be 1");
        if (alpha < 0.0) throw ParameterError("alpha must be nonnegative");
        if (gamma < 0.0 || gamma_phi < 0.0 || kappa < 0.0)
            throw ParameterError("damping rates must be nonnegative");
        if (n_th < 0.0 || n_c < 0.0)
            throw ParameterError("thermal occupations must be nonnegative");
        if (delta_flag != 0 && delta_flag != 1)
            throw ParameterError("delta_flag must be 0 or 1");
        if (n_qubits < 1 || n_qubits > 3)
            throw ParameterError("n_qubits must be 1, 2 or 3");
        if (G != 0.0 && g != 0.0 && alpha != 0.0) {
            const double rel = std::abs(G - 2.0 * g * alpha) / std::abs(G);
            if (rel > 1e-12)
                throw ParameterError(
                    "G and (g, alpha) are inconsistent: require G = 2*g*alpha");
        }
    }
};

}  // namespace rabi
