// srm.hpp - Lossless semiclassical Rabi model in four tiers: the textbook
// RWA closed form, a Bessel-corrected closed form ("intermediate"), the
// semi-analytic reduced ODEs with a three-term Jacobi-Anger drive, and the
// exact reduced ODEs.

#pragma once

#include <cmath>
#include <complex>
#include <span>

#include "rabi/bessel.hpp"
#include "rabi/ode.hpp"
#include "rabi/params.hpp"
#include "rabi/timeseries.hpp"

namespace rabi::srm {

using std::complex;

struct QubitAmplitudes {
    cplx c_g{1.0, 0.0};
    cplx c_e{0.0, 0.0};

    double norm_sq() const { return std::norm(c_g) + std::norm(c_e); }
};

inline const QubitAmplitudes kGround{};

/// Eigendecomposition of the time-independent rotating-frame Hamiltonian:
/// energies +-R/2 with R = sqrt(G^2 + Delta^2) and eigenstates
/// |phi+-> = sqrt(1/(R R+-)) (R+- |g> +- (G/2) |e>), R+- = (R +- Delta)/2.
struct RotatingEigensystem {
    double R, R_plus, R_minus;
    double E_plus, E_minus;
    QubitAmplitudes phi_plus, phi_minus;
};

inline RotatingEigensystem eigensystem(const ModelParams& p) {
    if (p.G == 0.0 && p.Delta == 0.0)
        throw DegenerateSpectrumError("eigensystem: G = Delta = 0 is degenerate");
    if (p.G <= 0.0)
        throw ParameterError("eigensystem: require G > 0");
    RotatingEigensystem e;
    e.R = std::sqrt(p.G * p.G + p.Delta * p.Delta);
    e.R_plus = (e.R + p.Delta) / 2.0;
    e.R_minus = (e.R - p.Delta) / 2.0;
    e.E_plus = e.R / 2.0;
    e.E_minus = -e.R / 2.0;
    const double np = std::sqrt(1.0 / (e.R * e.R_plus));
    const double nm = std::sqrt(1.0 / (e.R * e.R_minus));
    e.phi_plus = {np * e.R_plus, np * p.G / 2.0};
    e.phi_minus = {nm * e.R_minus, -nm * p.G / 2.0};
    return e;
}

/// Amplitudes on |phi+->, a+-(0) = A+-(0) = sqrt(1/(R R+-)) (R+- c_g +- (G/2) c_e).
struct ReducedAmplitudes {
    cplx a_plus, a_minus;
    double t = 0.0;
};

inline ReducedAmplitudes initial_reduced_amplitudes(
    const QubitAmplitudes& q, const RotatingEigensystem& e) {
    const double G2 = e.R_plus * e.R_minus * 4.0;  // G^2
    const double G = std::sqrt(G2);
    ReducedAmplitudes a;
    a.a_plus = std::sqrt(1.0 / (e.R * e.R_plus)) *
               (e.R_plus * q.c_g + (G / 2.0) * q.c_e);
    a.a_minus = std::sqrt(1.0 / (e.R * e.R_minus)) *
                (e.R_minus * q.c_g - (G / 2.0) * q.c_e);
    return a;
}

/// Textbook resonant RWA excitation probability.
inline double pe_rwa(const QubitAmplitudes& q, double G, double t) {
    const double s = std::sin(G * t / 2.0);
    return s * s + std::norm(q.c_e) * std::cos(G * t) -
           std::imag(q.c_e * std::conj(q.c_g)) * std::sin(G * t);
}

namespace detail {

/// P_e reconstruction from the reduced amplitudes (resonant form):
/// P_e = (1/2) |exp(-i [Ups sin(2wt) + G t]) a+ - a-|^2.
inline double pe_from_reduced(cplx a_plus, cplx a_minus, double G,
                              double upsilon, double t) {
    const cplx phase =
        std::exp(cplx(0.0, -(upsilon * std::sin(2.0 * t) + G * t)));
    return 0.5 * std::norm(phase * a_plus - a_minus);
}

}  // namespace detail

/// Closed-form solution keeping the slow J1 part of the drive. Resonant
/// only; valid for Upsilon = G/2omega well below 1.
inline double pe_intermediate(const QubitAmplitudes& q, const ModelParams& p,
                              double t) {
    const double G = p.G;
    const double ups = G / (2.0 * p.omega);
    const double J1 = bessel_j(1, ups);
    const double s = std::sqrt(1.0 + J1 * J1);
    const double den = 2.0 * std::sqrt(2.0) * s;
    const cplx b1 = ((s - 1.0 + J1) * q.c_g + (s - 1.0 - J1) * q.c_e) / den;
    const cplx b2 = ((s + 1.0 - J1) * q.c_g + (s + 1.0 + J1) * q.c_e) / den;
    const cplx ep = std::exp(cplx(0.0, G * s * t / 2.0));
    const cplx em = std::conj(ep);
    const cplx half = std::exp(cplx(0.0, G * t / 2.0));
    const cplx a_plus = half * (b1 * ep + b2 * em);
    const cplx a_minus =
        (std::conj(half) / J1) * (b1 * (1.0 + s) * ep + b2 * (1.0 - s) * em);
    return detail::pe_from_reduced(a_plus, a_minus, G, ups, t);
}

/// Reduced ODEs with the three-term Jacobi-Anger drive
/// Q_t ~ i (G/2) [(J0 - J2) sin(2wt) + i J1] exp(i G t). Resonant only.
inline TimeSeries<double> evolve_semianalytic(
    const QubitAmplitudes& q, const ModelParams& p,
    std::span<const double> sample_times, const ode::Options& opt = {}) {
    const double G = p.G;
    const double ups = G / (2.0 * p.omega);
    const double J0 = bessel_j(0, ups);
    const double J1 = bessel_j(1, ups);
    const double J2 = bessel_j(2, ups);
    auto eig = eigensystem(p);
    auto a0 = initial_reduced_amplitudes(q, eig);

    ode::Problem prob;
    prob.y0 = {a0.a_plus, a0.a_minus};
    prob.t0 = 0.0;
    prob.t1 = sample_times.back();
    prob.sample_times.assign(sample_times.begin(), sample_times.end());
    prob.opt = opt;
    prob.rhs = [=](double t, const cvec& y, cvec& dy) {
        const cplx Qt = cplx(0.0, G / 2.0) *
                        ((J0 - J2) * std::sin(2.0 * t) + cplx(0.0, J1)) *
                        std::exp(cplx(0.0, G * t));
        dy[0] = cplx(0.0, -1.0) * Qt * y[1];
        dy[1] = cplx(0.0, -1.0) * std::conj(Qt) * y[0];
    };
    auto r = ode::integrate(prob);

    TimeSeries<double> out;
    out.t = r.times;
    out.stats = r.stats;
    out.rec.reserve(r.states.size());
    for (size_t i = 0; i < r.states.size(); ++i)
        out.rec.push_back(detail::pe_from_reduced(
            r.states[i][0], r.states[i][1], G, ups, r.times[i]));
    return out;
}

/// Exact SRM dynamics (up to integrator tolerance): reduced ODEs with the
/// untruncated drive, general detuning. delta_flag = 0 switches the
/// counter-rotating terms off, making the RWA closed form exact.
inline TimeSeries<double> evolve_exact(const QubitAmplitudes& q,
                                       const ModelParams& p,
                                       std::span<const double> sample_times,
                                       const ode::Options& opt = {}) {
    auto eig = eigensystem(p);
    auto a0 = initial_reduced_amplitudes(q, eig);
    const double G = p.G, R = eig.R;
    const double Rp = eig.R_plus, Rm = eig.R_minus;
    const bool cr_on = p.delta_flag != 0;
    const double ups = cr_on ? G * G / (2.0 * p.omega * R) : 0.0;

    // General-detuning reconstruction through the eigenstate expansion:
    // P_e = (G/2R)^2 |sqrt(R/R+) A+ e^{-iRt} - sqrt(R/R-) A-|^2 with
    // A+- = e^{∓i ups sin(2wt)/2} a+-.
    const double wp = std::sqrt(R / Rp), wm = std::sqrt(R / Rm);
    auto pe_of = [=](cplx ap, cplx am, double t) {
        const double half_phase = ups * std::sin(2.0 * t) / 2.0;
        const cplx Ap = std::exp(cplx(0.0, -half_phase)) * ap;
        const cplx Am = std::exp(cplx(0.0, +half_phase)) * am;
        const double pref = G / (2.0 * R);
        return pref * pref *
               std::norm(wp * Ap * std::exp(cplx(0.0, -R * t)) - wm * Am);
    };

    ode::Problem prob;
    prob.y0 = {a0.a_plus, a0.a_minus};
    prob.t0 = 0.0;
    prob.t1 = sample_times.back();
    prob.sample_times.assign(sample_times.begin(), sample_times.end());
    prob.opt = opt;
    if (cr_on) {
        prob.rhs = [=](double t, const cvec& y, cvec& dy) {
            const cplx e2 = std::exp(cplx(0.0, 2.0 * t));
            const cplx Qt =
                (G / (2.0 * R)) *
                std::exp(cplx(0.0, ups * std::sin(2.0 * t) + R * t)) *
                (Rm * e2 - Rp * std::conj(e2));
            dy[0] = cplx(0.0, -1.0) * Qt * y[1];
            dy[1] = cplx(0.0, -1.0) * std::conj(Qt) * y[0];
        };
    } else {
        prob.rhs = [](double, const cvec&, cvec& dy) {
            dy[0] = dy[1] = cplx{0.0, 0.0};
        };
    }
    auto r = ode::integrate(prob);

    TimeSeries<double> out;
    out.t = r.times;
    out.stats = r.stats;
    out.rec.reserve(r.states.size());
    for (size_t i = 0; i < r.states.size(); ++i)
        out.rec.push_back(pe_of(r.states[i][0], r.states[i][1], r.times[i]));
    return out;
}

}  // namespace rabi::srm
