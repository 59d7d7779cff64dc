// qrm.hpp - Unitary quantum Rabi model over a truncated Fock window for
// 1-3 identical qubits (symmetric Dicke ladder), integrated in the double
// rotating frame where the only explicit time dependence is the 2w
// counter-rotating term:
//
//   H(t) = -(Delta/2) Jz + g (a J+ + a† J-) + g (a J- e^{-2iwt} + a† J+ e^{2iwt})
//
// All reported observables are diagonal in this frame; the coherent-state
// survival target rotates into the fixed |alpha>.

#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "rabi/entropy.hpp"
#include "rabi/fock.hpp"
#include "rabi/ode.hpp"
#include "rabi/params.hpp"
#include "rabi/timeseries.hpp"

namespace rabi::qrm {

struct StateIntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WindowOverflowError : std::runtime_error {
    FockWindow suggested;
    WindowOverflowError(const std::string& msg, FockWindow s)
        : std::runtime_error(msg), suggested(s) {}
};

struct QrmObservables {
    double p_e;               // excitation probability of any single qubit
    double delta_n;           // <n>(t) - <n>(0)
    double s_q;               // von Neumann entropy of one qubit, nats
    double s_q_linear;        // linear entropy of one qubit
    double s_f_linear;        // linear entropy of the field
    double p_alpha_survival;  // overlap with the freely evolving coherent state
    std::vector<double> photon_dist;  // p_n over the window
};

/// Collective raising matrix elements on the Dicke ladder:
/// J+ |k> = jp(N, k) |k+1>, jp = sqrt((N - k)(k + 1)).
inline double dicke_raise(int n_qubits, int k) {
    return std::sqrt(static_cast<double>((n_qubits - k) * (k + 1)));
}

/// Writes -i H(t) |state> into `deriv`. Banded: couples n <-> n+-1 only,
/// cost O(n_levels * window width).
inline void apply_hamiltonian(const ModelParams& p, const FockWindow& w,
                              int n_levels, double t, const cplx* state,
                              cplx* deriv, bool counter_rotating = true) {
    const int N = n_levels - 1;
    const long W = w.width();
    const double g = p.g;
    const cplx e2 = std::exp(cplx(0.0, 2.0 * t));  // omega = 1
    const cplx e2c = std::conj(e2);
    for (int k = 0; k <= N; ++k) {
        cplx* out = deriv + static_cast<size_t>(k) * W;
        const double hz = -(p.Delta / 2.0) * (2.0 * k - N);
        const cplx* same = state + static_cast<size_t>(k) * W;
        for (long j = 0; j < W; ++j) out[j] = hz * same[j];
        if (k > 0) {
            const cplx* lower = state + static_cast<size_t>(k - 1) * W;
            const double jp = dicke_raise(N, k - 1);
            // a J+ : |k-1, n+1> -> |k, n>, element g jp sqrt(n+1)
            for (long j = 0; j < W - 1; ++j)
                out[j] += g * jp * std::sqrt(double(w.n1 + j + 1)) * lower[j + 1];
            if (counter_rotating) {
                // a† J+ e^{2iwt} : |k-1, n-1> -> |k, n>, element g jp sqrt(n)
                for (long j = 1; j < W; ++j)
                    out[j] +=
                        g * jp * std::sqrt(double(w.n1 + j)) * e2 * lower[j - 1];
            }
        }
        if (k < N) {
            const cplx* upper = state + static_cast<size_t>(k + 1) * W;
            const double jp = dicke_raise(N, k);
            // a† J- : |k+1, n-1> -> |k, n>, element g jp sqrt(n)
            for (long j = 1; j < W; ++j)
                out[j] += g * jp * std::sqrt(double(w.n1 + j)) * upper[j - 1];
            if (counter_rotating) {
                // a J- e^{-2iwt} : |k+1, n+1> -> |k, n>, element g jp sqrt(n+1)
                for (long j = 0; j < W - 1; ++j)
                    out[j] += g * jp * std::sqrt(double(w.n1 + j + 1)) * e2c *
                              upper[j + 1];
            }
        }
    }
    const size_t dim = static_cast<size_t>(n_levels) * W;
    for (size_t i = 0; i < dim; ++i) deriv[i] *= cplx(0.0, -1.0);
}

/// Single-qubit excitation probability. Dicke level k carries k
/// excitations, so each of the N qubits is excited with weight k/N.
inline double excitation_probability(const JointState& st) {
    const int N = st.n_levels - 1;
    const long W = st.window.width();
    double pe = 0.0;
    for (int k = 1; k <= N; ++k) {
        double w = 0.0;
        const cplx* row = st.amplitudes.data() + static_cast<size_t>(k) * W;
        for (long j = 0; j < W; ++j) w += std::norm(row[j]);
        pe += (static_cast<double>(k) / N) * w;
    }
    return pe;
}

inline std::vector<double> photon_distribution(const JointState& st) {
    const long W = st.window.width();
    std::vector<double> pn(W, 0.0);
    for (int k = 0; k < st.n_levels; ++k) {
        const cplx* row = st.amplitudes.data() + static_cast<size_t>(k) * W;
        for (long j = 0; j < W; ++j) pn[j] += std::norm(row[j]);
    }
    return pn;
}

inline double mean_photon_number(const FockWindow& w,
                                 std::span<const double> pn) {
    double nbar = 0.0;
    for (long j = 0; j < w.width(); ++j) nbar += double(w.n1 + j) * pn[j];
    return nbar;
}

/// Overlap with the (frame-fixed) coherent state: sum over qubit levels of
/// |<alpha| level row>|^2.
inline double coherent_survival(const JointState& st,
                                std::span<const cplx> coh) {
    const long W = st.window.width();
    double p = 0.0;
    for (int k = 0; k < st.n_levels; ++k) {
        const cplx* row = st.amplitudes.data() + static_cast<size_t>(k) * W;
        cplx ov{0.0, 0.0};
        for (long j = 0; j < W; ++j) ov += std::conj(coh[j]) * row[j];
        p += std::norm(ov);
    }
    return p;
}

struct Entropies {
    double s_q, s_q_linear, s_f_linear;
};

/// Entanglement entropies of the pure joint state. The collective reduced
/// matrix rho_Q comes from contracting the Fock index; the Schmidt
/// decomposition makes 1 - Tr rho_Q^2 the field linear entropy as well.
/// For N > 1 the symmetric rho_Q is further reduced to one qubit.
inline Entropies entanglement_entropies(const JointState& st) {
    const double nrm = st.norm_sq();
    if (std::abs(nrm - 1.0) > 1e-6)
        throw StateIntegrityError("entanglement_entropies: state norm " +
                                  std::to_string(nrm) + " is not 1");
    const int L = st.n_levels;
    const int N = L - 1;
    const long W = st.window.width();
    std::vector<cplx> rho_q(static_cast<size_t>(L) * L, cplx{0.0, 0.0});
    for (int k = 0; k < L; ++k)
        for (int l = 0; l <= k; ++l) {
            const cplx* rk = st.amplitudes.data() + static_cast<size_t>(k) * W;
            const cplx* rl = st.amplitudes.data() + static_cast<size_t>(l) * W;
            cplx s{0.0, 0.0};
            for (long j = 0; j < W; ++j) s += rk[j] * std::conj(rl[j]);
            rho_q[static_cast<size_t>(k) * L + l] = s;
            rho_q[static_cast<size_t>(l) * L + k] = std::conj(s);
        }
    // normalize by the actual trace so that the small norm drift of the
    // integrator cancels identically between the two reductions
    double tr = 0.0;
    for (int k = 0; k < L; ++k)
        tr += rho_q[static_cast<size_t>(k) * L + k].real();
    for (auto& v : rho_q) v /= tr;
    double tr2 = 0.0;
    for (int k = 0; k < L; ++k)
        for (int l = 0; l < L; ++l)
            tr2 += std::norm(rho_q[static_cast<size_t>(k) * L + l]);
    Entropies e;
    e.s_f_linear = 1.0 - tr2;

    // reduce the symmetric N-qubit matrix to a single qubit
    double p_e1 = 0.0;
    cplx coh{0.0, 0.0};
    for (int k = 0; k <= N; ++k)
        p_e1 += (static_cast<double>(k) / N) *
                rho_q[static_cast<size_t>(k) * L + k].real();
    for (int k = 0; k + 1 <= N; ++k)
        coh += (std::sqrt(double((k + 1) * (N - k))) / N) *
               rho_q[static_cast<size_t>(k + 1) * L + k];
    e.s_q = von_neumann_2x2(p_e1, coh);
    e.s_q_linear = linear_entropy_2x2(p_e1, coh);
    return e;
}

inline QrmObservables observables(const JointState& st, const ModelParams&,
                                  std::span<const cplx> coh, double nbar0) {
    QrmObservables o;
    o.photon_dist = photon_distribution(st);
    o.p_e = excitation_probability(st);
    o.delta_n = mean_photon_number(st.window, o.photon_dist) - nbar0;
    o.p_alpha_survival = coherent_survival(st, coh);
    const Entropies e = entanglement_entropies(st);
    o.s_q = e.s_q;
    o.s_q_linear = e.s_q_linear;
    o.s_f_linear = e.s_f_linear;
    return o;
}

struct EvolveConfig {
    ode::Options opt;
    bool counter_rotating = true;   // testing hook (Jaynes-Cummings limit)
    double leakage_limit = 1e-6;
    double fock_cutoff = 1e-10;
    bool keep_photon_dist = true;   // photon_dist can be bulky; optional
};

/// Integrates the rotating-frame Schroedinger equation from
/// |g...g> (x) |alpha> and emits the observable record at each sample.
inline TimeSeries<QrmObservables> evolve_qrm(const ModelParams& p,
                                             std::span<const double> sample_times,
                                             const EvolveConfig& cfg = {}) {
    p.validate();
    const FockWindow w = build_window(p.alpha, cfg.fock_cutoff);
    JointState st = initial_joint_state(p, w);
    const int L = st.n_levels;
    const long W = w.width();
    const cvec coh = coherent_amplitudes(p.alpha, w);
    const double nbar0 =
        mean_photon_number(w, photon_distribution(st));

    ode::Problem prob;
    prob.y0 = st.amplitudes;
    prob.t0 = 0.0;
    prob.t1 = sample_times.back();
    prob.sample_times.assign(sample_times.begin(), sample_times.end());
    prob.opt = cfg.opt;
    const bool cr = cfg.counter_rotating && p.delta_flag != 0;
    prob.rhs = [&p, &w, L, cr](double t, const cvec& y, cvec& dy) {
        apply_hamiltonian(p, w, L, t, y.data(), dy.data(), cr);
    };
    auto r = ode::integrate(prob);

    TimeSeries<QrmObservables> out;
    out.t = r.times;
    out.stats = r.stats;
    out.rec.reserve(r.states.size());
    for (size_t i = 0; i < r.states.size(); ++i) {
        st.amplitudes = std::move(r.states[i]);
        st.frame_time = r.times[i];
        const double leak = st.boundary_leakage();
        if (leak > cfg.leakage_limit) {
            const long pad = std::max<long>(16, W / 8);
            throw WindowOverflowError(
                "evolve_qrm: boundary leakage " + std::to_string(leak) +
                    " exceeds limit; widen the Fock window",
                {std::max<long>(0, w.n1 - pad), w.n2 + pad});
        }
        QrmObservables o = observables(st, p, coh, nbar0);
        if (!cfg.keep_photon_dist) o.photon_dist.clear();
        out.rec.push_back(std::move(o));
    }
    return out;
}

}  // namespace rabi::qrm
