// qrm_master.hpp - Lindblad master equation for the full quantum Rabi
// model over the truncated joint basis, in the same rotating frame as the
// pure-state engine (the dissipators are invariant under that rotation).
// The density matrix is dense; the superoperator is applied matrix-free
// as banded left/right multiplications.

#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "rabi/fock.hpp"
#include "rabi/ode.hpp"
#include "rabi/params.hpp"
#include "rabi/qrm.hpp"
#include "rabi/timeseries.hpp"

namespace rabi::qrm_master {

using qrm::QrmObservables;
using qrm::WindowOverflowError;

/// Density matrix over (qubit level) x (Fock index), row-major, with the
/// flat index i = level * width + (n - n1).
struct DensityState {
    FockWindow window;
    int n_levels = 2;
    cvec rho;  // dimension (n_levels * width)^2
    double t = 0.0;

    long dim() const { return n_levels * window.width(); }

    double trace() const {
        double tr = 0.0;
        const long d = dim();
        for (long i = 0; i < d; ++i) tr += rho[i * d + i].real();
        return tr;
    }

    double hermiticity_error() const {
        double e = 0.0;
        const long d = dim();
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < i; ++j)
                e = std::max(e, std::abs(rho[i * d + j] -
                                         std::conj(rho[j * d + i])));
        return e;
    }
};

struct MasterConfig {
    ode::Options opt;
    double fock_cutoff = 1e-10;
    /// Extra Fock indices added below the coherent window; cavity decay
    /// drifts the distribution toward lower n over long horizons.
    long lower_pad = -1;  // -1: sized automatically from kappa * horizon
    double leakage_limit = 1e-6;
    double alpha_sq_guard = 200.0;
    bool keep_photon_dist = true;
};

namespace detail {

/// B += H(t) rho restricted to one band: B[(k,j), :] += c * rho[(ks,j+dj), :].
inline void add_band(cplx* B, const cplx* rho, long d, long W, int k, int ks,
                     long dj, const double* wgt, cplx c) {
    const long j_lo = dj > 0 ? 0 : -dj;
    const long j_hi = dj > 0 ? W - dj : W;
    for (long j = j_lo; j < j_hi; ++j) {
        cplx* out = B + (static_cast<size_t>(k) * W + j) * d;
        const cplx* in = rho + (static_cast<size_t>(ks) * W + j + dj) * d;
        const cplx cw = c * wgt[j];
        for (long m = 0; m < d; ++m) out[m] += cw * in[m];
    }
}

}  // namespace detail

/// Right-hand side of the master equation for a single qubit. Kept as a
/// class so the banded weights and the B = H rho workspace are set up once.
class MasterRhs {
  public:
    MasterRhs(const ModelParams& p, const FockWindow& w)
        : p_(p), w_(w), W_(w.width()), d_(2 * w.width()) {
        sq_dn_.resize(W_);   // sqrt(n)
        sq_up_.resize(W_);   // sqrt(n+1)
        for (long j = 0; j < W_; ++j) {
            sq_dn_[j] = std::sqrt(double(w.n1 + j));
            sq_up_[j] = std::sqrt(double(w.n1 + j + 1));
        }
        B_.assign(static_cast<size_t>(d_) * d_, cplx{0.0, 0.0});
        c_down_ = 0.5 * p.gamma * (p.n_th + 1.0);
        c_up_ = 0.5 * p.gamma * p.n_th;
        c_phi_ = 0.5 * p.gamma_phi;
        k_down_ = 0.5 * p.kappa * (p.n_c + 1.0);
        k_up_ = 0.5 * p.kappa * p.n_c;
        // diagonal of the combined L†L anticommutator, per flat index
        half_decay_.resize(d_);
        for (long i = 0; i < d_; ++i) {
            const int k = static_cast<int>(i / W_);
            const double n = double(w.n1 + i % W_);
            // sigma_z† sigma_z = 1: the anticommutator contributes
            // c_phi per side, 2 c_phi rho in total
            double hd = c_phi_;
            hd += (k == 1) ? c_down_ : c_up_;
            hd += k_down_ * n + k_up_ * (n + 1.0);
            half_decay_[i] = hd;
        }
    }

    void operator()(double t, const cvec& y, cvec& dy) {
        const cplx* rho = y.data();
        cplx* out = dy.data();
        const long d = d_, W = W_;
        cplx* B = B_.data();
        std::fill(B_.begin(), B_.end(), cplx{0.0, 0.0});

        // B = H(t) rho, band by band
        const double g = p_.g;
        const cplx e2 = std::exp(cplx(0.0, 2.0 * t));
        if (p_.Delta != 0.0) {
            detail::add_band(B, rho, d, W, 0, 0, 0, ones(), +p_.Delta / 2.0);
            detail::add_band(B, rho, d, W, 1, 1, 0, ones(), -p_.Delta / 2.0);
        }
        detail::add_band(B, rho, d, W, 1, 0, +1, sq_up_.data(), g);  // a s+
        detail::add_band(B, rho, d, W, 0, 1, -1, sq_dn_.data(), g);  // a† s-
        if (p_.delta_flag != 0) {
            detail::add_band(B, rho, d, W, 1, 0, -1, sq_dn_.data(),
                             g * e2);  // a† s+ e^{2iwt}
            detail::add_band(B, rho, d, W, 0, 1, +1, sq_up_.data(),
                             g * std::conj(e2));  // a s- e^{-2iwt}
        }

        // drho = -i (B - B†) - {half_decay, rho} + jump terms
        for (long i = 0; i < d; ++i) {
            const double hi = half_decay_[i];
            for (long j = 0; j < d; ++j) {
                const cplx comm = B[i * d + j] - std::conj(B[j * d + i]);
                out[i * d + j] = cplx(0.0, -1.0) * comm -
                                 (hi + half_decay_[j]) * rho[i * d + j];
            }
        }

        // 2 L rho L† for each jump operator
        // sigma-: (1,j) -> (0,j)
        add_jump_qubit(out, rho, 2.0 * c_down_, 1, 0);
        // sigma+: (0,j) -> (1,j)
        add_jump_qubit(out, rho, 2.0 * c_up_, 0, 1);
        // sigma_z: diagonal weights (2k-1)
        if (c_phi_ > 0.0) add_jump_sigma_z(out, rho);
        // a: (k,j) -> (k,j-1), weight sqrt(n)
        if (k_down_ > 0.0) add_jump_cavity(out, rho, 2.0 * k_down_, -1);
        // a†: (k,j) -> (k,j+1), weight sqrt(n+1)
        if (k_up_ > 0.0) add_jump_cavity(out, rho, 2.0 * k_up_, +1);
    }

    long dim() const { return d_; }

  private:
    const double* ones() {
        if (ones_.empty()) ones_.assign(W_, 1.0);
        return ones_.data();
    }

    // 2c L rho L† for L mapping qubit level ks -> kd with unit weight
    void add_jump_qubit(cplx* out, const cplx* rho, double c, int ks, int kd) {
        if (c <= 0.0) return;
        const long W = W_, d = d_;
        for (long j = 0; j < W; ++j) {
            cplx* o = out + (static_cast<size_t>(kd) * W + j) * d +
                      static_cast<size_t>(kd) * W;
            const cplx* r = rho + (static_cast<size_t>(ks) * W + j) * d +
                            static_cast<size_t>(ks) * W;
            for (long m = 0; m < W; ++m) o[m] += c * r[m];
        }
    }

    void add_jump_sigma_z(cplx* out, const cplx* rho) {
        const long W = W_, d = d_;
        const double c = 2.0 * c_phi_;
        for (long i = 0; i < d; ++i) {
            const double zi = (i / W == 1) ? 1.0 : -1.0;
            for (long j = 0; j < d; ++j) {
                const double zj = (j / W == 1) ? 1.0 : -1.0;
                out[i * d + j] += c * zi * zj * rho[i * d + j];
            }
        }
    }

    // 2c L rho L† for the cavity ladder operators; boundary terms that map
    // outside the window are dropped (their weight sits on the padded edge).
    void add_jump_cavity(cplx* out, const cplx* rho, double c, int shift) {
        const long W = W_, d = d_;
        const double* wgt = shift < 0 ? sq_dn_.data() : sq_up_.data();
        for (int ki = 0; ki < 2; ++ki)
            for (long ji = 0; ji < W; ++ji) {
                const long ii = ki * W + ji;
                const long io = ii + shift;
                if (io < ki * W || io >= (ki + 1) * W) continue;
                const double wi = wgt[ji];
                for (int kj = 0; kj < 2; ++kj) {
                    const cplx* r = rho + static_cast<size_t>(ii) * d + kj * W;
                    cplx* o = out + static_cast<size_t>(io) * d + kj * W;
                    const long m_lo = shift < 0 ? 1 : 0;
                    const long m_hi = shift < 0 ? W : W - 1;
                    for (long m = m_lo; m < m_hi; ++m)
                        o[m + shift] += c * wi * wgt[m] * r[m];
                }
            }
    }

    ModelParams p_;
    FockWindow w_;
    long W_, d_;
    std::vector<double> sq_dn_, sq_up_, half_decay_, ones_;
    cvec B_;
    double c_down_, c_up_, c_phi_, k_down_, k_up_;
};

inline QrmObservables observables_from_density(const DensityState& st,
                                               std::span<const cplx> coh,
                                               double nbar0) {
    const long W = st.window.width();
    const long d = st.dim();
    const cplx* rho = st.rho.data();
    QrmObservables o;
    o.photon_dist.assign(W, 0.0);
    for (int k = 0; k < 2; ++k)
        for (long j = 0; j < W; ++j) {
            const long i = k * W + j;
            o.photon_dist[j] += rho[i * d + i].real();
        }
    o.p_e = 0.0;
    for (long j = 0; j < W; ++j) {
        const long i = W + j;
        o.p_e += rho[i * d + i].real();
    }
    o.delta_n = qrm::mean_photon_number(st.window, o.photon_dist) - nbar0;

    // qubit reduction
    double ree = o.p_e;
    cplx reg{0.0, 0.0};
    for (long j = 0; j < W; ++j)
        reg += rho[(W + j) * d + j];  // <e,n| rho |g,n>
    o.s_q = von_neumann_2x2(ree, reg);
    o.s_q_linear = linear_entropy_2x2(ree, reg);

    // field reduction: rho_f[n,m] = sum_k rho[(k,n),(k,m)]
    double tr2 = 0.0;
    cplx surv{0.0, 0.0};
    for (long n = 0; n < W; ++n)
        for (long m = 0; m < W; ++m) {
            const cplx f = rho[n * d + m] + rho[(W + n) * d + W + m];
            tr2 += std::norm(f);
            surv += std::conj(coh[n]) * f * coh[m];
        }
    o.s_f_linear = 1.0 - tr2;
    o.p_alpha_survival = surv.real();
    return o;
}

/// Evolves |g> (x) |alpha><alpha| (x) <g| under the full Lindblad equation
/// and samples the observable record. Single qubit only (independent qubit
/// dissipation leaves the symmetric subspace).
inline TimeSeries<QrmObservables> evolve_master_qrm(
    const ModelParams& p, std::span<const double> sample_times,
    const MasterConfig& cfg = {}) {
    p.validate();
    if (p.n_qubits != 1)
        throw ParameterError(
            "evolve_master_qrm: only the single-qubit master equation is "
            "supported");
    if (p.alpha * p.alpha > cfg.alpha_sq_guard)
        throw ParameterError(
            "evolve_master_qrm: alpha^2 exceeds the density-matrix cost "
            "guard");

    FockWindow w = build_window(p.alpha, cfg.fock_cutoff);
    const double horizon = sample_times.back();
    long pad = cfg.lower_pad;
    if (pad < 0)
        pad = static_cast<long>(
                  std::ceil(p.alpha * p.alpha * p.kappa * horizon)) +
              8;
    w.n1 = std::max<long>(0, w.n1 - pad);

    const long W = w.width();
    const long d = 2 * W;
    const cvec coh = coherent_amplitudes(p.alpha, w);

    // initial projector |g, alpha><g, alpha|
    cvec rho0(static_cast<size_t>(d) * d, cplx{0.0, 0.0});
    for (long n = 0; n < W; ++n)
        for (long m = 0; m < W; ++m)
            rho0[n * d + m] = coh[n] * std::conj(coh[m]);
    double nbar0 = 0.0;
    for (long n = 0; n < W; ++n)
        nbar0 += double(w.n1 + n) * std::norm(coh[n]);

    auto rhs = std::make_shared<MasterRhs>(p, w);
    ode::Problem prob;
    prob.y0 = std::move(rho0);
    prob.t0 = 0.0;
    prob.t1 = horizon;
    prob.sample_times.assign(sample_times.begin(), sample_times.end());
    prob.opt = cfg.opt;
    prob.opt.post_accept = [d](double, cvec& y) {
        cplx* r = y.data();
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < i; ++j) {
                const cplx a = 0.5 * (r[i * d + j] + std::conj(r[j * d + i]));
                r[i * d + j] = a;
                r[j * d + i] = std::conj(a);
            }
        for (long i = 0; i < d; ++i)
            r[i * d + i] = cplx(r[i * d + i].real(), 0.0);
    };
    prob.rhs = [rhs](double t, const cvec& y, cvec& dy) { (*rhs)(t, y, dy); };
    auto r = ode::integrate(prob);

    TimeSeries<QrmObservables> out;
    out.t = r.times;
    out.stats = r.stats;
    out.rec.reserve(r.states.size());
    DensityState st;
    st.window = w;
    st.n_levels = 2;
    for (size_t i = 0; i < r.states.size(); ++i) {
        st.rho = std::move(r.states[i]);
        st.t = r.times[i];
        // boundary trace leakage check on the 5 outermost Fock indices;
        // n = 0 is a physical boundary, not a truncation, so the lower
        // edge only counts when the window starts above the vacuum
        double leak = 0.0;
        const long edge = std::min<long>(5, W);
        for (int k = 0; k < 2; ++k)
            for (long j = 0; j < edge; ++j) {
                const long hi = k * W + (W - 1 - j);
                leak += st.rho[hi * d + hi].real();
                if (w.n1 > 0) {
                    const long lo = k * W + j;
                    leak += st.rho[lo * d + lo].real();
                }
            }
        if (leak > cfg.leakage_limit)
            throw WindowOverflowError(
                "evolve_master_qrm: boundary trace " + std::to_string(leak) +
                    " exceeds limit; widen the Fock window",
                {std::max<long>(0, w.n1 - W / 4), w.n2 + W / 8});
        QrmObservables o = observables_from_density(st, coh, nbar0);
        if (!cfg.keep_photon_dist) o.photon_dist.clear();
        out.rec.push_back(std::move(o));
    }
    return out;
}

}  // namespace rabi::qrm_master
