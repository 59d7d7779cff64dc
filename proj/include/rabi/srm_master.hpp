// srm_master.hpp - Markovian master equation for the driven two-level
// system, integrated in the lab frame with the explicit cos(wt) drive.

#pragma once

#include <cmath>
#include <complex>
#include <span>

#include "rabi/entropy.hpp"
#include "rabi/ode.hpp"
#include "rabi/params.hpp"
#include "rabi/srm.hpp"
#include "rabi/timeseries.hpp"

namespace rabi::srm_master {

struct QubitDensity {
    double rho_gg = 1.0;
    double rho_ee = 0.0;
    cplx rho_ge{0.0, 0.0};

    static QubitDensity pure(const srm::QubitAmplitudes& q) {
        return {std::norm(q.c_g), std::norm(q.c_e), q.c_g * std::conj(q.c_e)};
    }
};

struct Record {
    double p_e;
    double s_q;         // von Neumann entropy, nats
    double s_q_linear;  // 1 - Tr rho^2
};

/// Lindblad evolution with qubit damping (rate gamma, thermal occupation
/// n_th) and pure dephasing (gamma_phi). State vector layout:
/// (rho_gg, rho_ge, rho_eg, rho_ee).
inline TimeSeries<Record> evolve_master_srm(const QubitDensity& initial,
                                            const ModelParams& p,
                                            std::span<const double> sample_times,
                                            ode::Options opt = {}) {
    p.validate();
    const double Om = p.Omega();
    const double G = p.G;
    const double c_down = 0.5 * p.gamma * (p.n_th + 1.0);
    const double c_up = 0.5 * p.gamma * p.n_th;
    const double c_phi = p.gamma_phi;

    ode::Problem prob;
    prob.y0 = {cplx(initial.rho_gg), initial.rho_ge,
               std::conj(initial.rho_ge), cplx(initial.rho_ee)};
    prob.t0 = 0.0;
    prob.t1 = sample_times.back();
    prob.sample_times.assign(sample_times.begin(), sample_times.end());
    prob.opt = std::move(opt);
    prob.opt.post_accept = [](double, cvec& y) {
        // restore Hermiticity after each accepted step
        const cplx ge = 0.5 * (y[1] + std::conj(y[2]));
        y[1] = ge;
        y[2] = std::conj(ge);
        y[0] = cplx(y[0].real(), 0.0);
        y[3] = cplx(y[3].real(), 0.0);
    };
    prob.rhs = [=](double t, const cvec& y, cvec& dy) {
        const cplx gg = y[0], ge = y[1], eg = y[2], ee = y[3];
        const double f = G * std::cos(t);  // drive matrix element, omega = 1
        const cplx i{0.0, 1.0};
        // -i [H, rho] with H = (Omega/2) sigma_z + f (sigma+ + sigma-)
        dy[0] = -i * f * (eg - ge);
        dy[3] = -i * f * (ge - eg);
        dy[1] = -i * (-Om * ge + f * (ee - gg));
        dy[2] = std::conj(dy[1]);
        // damping, thermal excitation, dephasing
        dy[0] += 2.0 * c_down * ee - 2.0 * c_up * gg;
        dy[3] += 2.0 * c_up * gg - 2.0 * c_down * ee;
        const double off = c_down + c_up + 2.0 * c_phi;
        dy[1] -= off * ge;
        dy[2] -= off * eg;
    };
    auto r = ode::integrate(prob);

    TimeSeries<Record> out;
    out.t = r.times;
    out.stats = r.stats;
    out.rec.reserve(r.states.size());
    for (const auto& y : r.states) {
        const double pe = y[3].real();
        out.rec.push_back({pe, von_neumann_2x2(pe, y[1]),
                           linear_entropy_2x2(pe, y[1])});
    }
    return out;
}

}  // namespace rabi::srm_master
