// ode.hpp - Adaptive embedded Runge-Kutta propagator for complex
// first-order systems. Eighth-order Dormand-Prince pair with the
// combined 5th/3rd order error estimator of Hairer, Norsett & Wanner,
// "Solving Ordinary Differential Equations I" (DOP853). Samples are
// produced by stepping exactly onto each requested time, so returned
// sample times equal the requested ones bit-for-bit.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "rabi/fock.hpp"

namespace rabi::ode {

struct StepStats {
    long accepted_steps = 0;
    long rejected_steps = 0;
    double max_error_estimate = 0.0;
};

struct IntegrationError : std::runtime_error {
    StepStats stats;
    IntegrationError(const std::string& msg, StepStats s)
        : std::runtime_error(msg), stats(s) {}
};

struct Options {
    double rtol = 1e-10;
    double atol = 1e-12;
    double max_step = std::numeric_limits<double>::infinity();
    /// When > 0, disables the adaptive controller and marches with this
    /// step size (still landing exactly on sample times).
    double fixed_step = 0.0;
    /// Invoked on the state after every accepted step (e.g. to
    /// re-symmetrize a density matrix).
    std::function<void(double, cvec&)> post_accept;
};

struct Problem {
    /// rhs(t, y, dydt): writes the derivative into dydt (pre-sized).
    std::function<void(double, const cvec&, cvec&)> rhs;
    cvec y0;
    double t0 = 0.0;
    double t1 = 1.0;
    std::vector<double> sample_times;  // sorted, within [t0, t1]
    Options opt;
};

struct Result {
    std::vector<double> times;
    std::vector<cvec> states;
    StepStats stats;
};

namespace dp853 {
// Node, stage, weight and error coefficients of the Dormand-Prince 8(5,3)
// tableau (Hairer-Norsett-Wanner, DOP853).
inline constexpr double c2 = 0.526001519587677318785587544488e-01;
inline constexpr double c3 = 0.789002279381515978178381316732e-01;
inline constexpr double c4 = 0.118350341907227396726757197510e+00;
inline constexpr double c5 = 0.281649658092772603273242802490e+00;
inline constexpr double c6 = 0.333333333333333333333333333333e+00;
inline constexpr double c7 = 0.25e+00;
inline constexpr double c8 = 0.307692307692307692307692307692e+00;
inline constexpr double c9 = 0.651282051282051282051282051282e+00;
inline constexpr double c10 = 0.6e+00;
inline constexpr double c11 = 0.857142857142857142857142857142e+00;

inline constexpr double a21 = 5.26001519587677318785587544488e-2;
inline constexpr double a31 = 1.97250569845378994544595329183e-2;
inline constexpr double a32 = 5.91751709536136983633785987549e-2;
inline constexpr double a41 = 2.95875854768068491816892993775e-2;
inline constexpr double a43 = 8.87627564304205475450678981324e-2;
inline constexpr double a51 = 2.41365134159266685502369798665e-1;
inline constexpr double a53 = -8.84549479328286085344864962717e-1;
inline constexpr double a54 = 9.24834003261792003115737966543e-1;
inline constexpr double a61 = 3.7037037037037037037037037037e-2;
inline constexpr double a64 = 1.70828608729473871279604482173e-1;
inline constexpr double a65 = 1.25467687566822425016691814123e-1;
inline constexpr double a71 = 3.7109375e-2;
inline constexpr double a74 = 1.70252211019544039314978060272e-1;
inline constexpr double a75 = 6.02165389804559606850219397283e-2;
inline constexpr double a76 = -1.7578125e-2;
inline constexpr double a81 = 3.70920001185047927108779319836e-2;
inline constexpr double a84 = 1.70383925712239993810214054705e-1;
inline constexpr double a85 = 1.07262030446373284651809199168e-1;
inline constexpr double a86 = -1.53194377486244017527936158236e-2;
inline constexpr double a87 = 8.27378916381402288758473766002e-3;
inline constexpr double a91 = 6.24110958716075717114429577812e-1;
inline constexpr double a94 = -3.36089262944694129406857109825e0;
inline constexpr double a95 = -8.68219346841726006818189891453e-1;
inline constexpr double a96 = 2.75920996994467083049415600797e1;
inline constexpr double a97 = 2.01540675504778934086186788979e1;
inline constexpr double a98 = -4.34898841810699588477366255144e1;
inline constexpr double a101 = 4.77662536438264365890433908527e-1;
inline constexpr double a104 = -2.48811461997166764192642586468e0;
inline constexpr double a105 = -5.90290826836842996371446475743e-1;
inline constexpr double a106 = 2.12300514481811942347288949897e1;
inline constexpr double a107 = 1.52792336328824235832596922938e1;
inline constexpr double a108 = -3.32882109689848629194453265587e1;
inline constexpr double a109 = -2.03312017085086261358222928593e-2;
inline constexpr double a111 = -9.3714243008598732571704021658e-1;
inline constexpr double a114 = 5.18637242884406370830023853209e0;
inline constexpr double a115 = 1.09143734899672957818500254654e0;
inline constexpr double a116 = -8.14978701074692612513997267357e0;
inline constexpr double a117 = -1.85200656599969598641566180701e1;
inline constexpr double a118 = 2.27394870993505042818970056734e1;
inline constexpr double a119 = 2.49360555267965238987089396762e0;
inline constexpr double a1110 = -3.0467644718982195003823669022e0;
inline constexpr double a121 = 2.27331014751653820792359768449e0;
inline constexpr double a124 = -1.05344954667372501984066689879e1;
inline constexpr double a125 = -2.00087205822486249909675718444e0;
inline constexpr double a126 = -1.79589318631187989172765950534e1;
inline constexpr double a127 = 2.79488845294199600508499808837e1;
inline constexpr double a128 = -2.85899827713502369474065508674e0;
inline constexpr double a129 = -8.87285693353062954433549289258e0;
inline constexpr double a1210 = 1.23605671757943030647266201528e1;
inline constexpr double a1211 = 6.43392746015763530355970484046e-1;

inline constexpr double b1 = 5.42937341165687622380535766363e-2;
inline constexpr double b6 = 4.45031289275240888144113950566e0;
inline constexpr double b7 = 1.89151789931450038304281599044e0;
inline constexpr double b8 = -5.8012039600105847814672114227e0;
inline constexpr double b9 = 3.1116436695781989440891606237e-1;
inline constexpr double b10 = -1.52160949662516078556178806805e-1;
inline constexpr double b11 = 2.01365400804030348374776537501e-1;
inline constexpr double b12 = 4.47106157277725905176885569043e-2;

inline constexpr double e31 = 0.244094488188976377952755905512e+00;
inline constexpr double e32 = 0.733846688281611857341361741547e+00;
inline constexpr double e33 = 0.220588235294117647058823529412e-01;

inline constexpr double e51 = 0.1312004499419488073250102996e-01;
inline constexpr double e56 = -0.1225156446376204440720569753e+01;
inline constexpr double e57 = -0.4957589496572501915214079952e+00;
inline constexpr double e58 = 0.1664377182454986536961530415e+01;
inline constexpr double e59 = -0.3503288487499736816886487290e+00;
inline constexpr double e510 = 0.3341791187130174790297318841e+00;
inline constexpr double e511 = 0.8192320648511571246570742613e-01;
inline constexpr double e512 = -0.2235530786388629525884427845e-01;
}  // namespace dp853

class Integrator {
  public:
    explicit Integrator(std::function<void(double, const cvec&, cvec&)> rhs,
                        size_t dim)
        : rhs_(std::move(rhs)), n_(dim) {
        for (auto* v : {&k1_, &k2_, &k3_, &k4_, &k5_, &k6_, &k7_, &k8_, &k9_,
                        &k10_, &k11_, &k12_, &yw_, &ynew_})
            v->assign(n_, cplx{0.0, 0.0});
    }

    Result run(const cvec& y0, double t0, double t1,
               std::span<const double> sample_times, const Options& opt) {
        if (!(t1 > t0)) throw ParameterError("integrate: require t1 > t0");
        if (!(opt.rtol > 0.0 && opt.atol > 0.0))
            throw ParameterError("integrate: tolerances must be positive");

        Result res;
        cvec y = y0;
        double t = t0;
        rhs_(t, y, k1_);

        double h = opt.fixed_step > 0.0 ? opt.fixed_step
                                        : initial_step(y, opt);
        h = std::min(h, opt.max_step);
        size_t next_sample = 0;
        while (next_sample < sample_times.size() &&
               sample_times[next_sample] <= t) {
            res.times.push_back(sample_times[next_sample]);
            res.states.push_back(y);
            ++next_sample;
        }

        const double h_min = 1e-12 * (t1 - t0);
        while (t < t1) {
            // land exactly on the next sample time (or t1)
            double target = t1;
            bool hit_sample = false;
            if (next_sample < sample_times.size() &&
                sample_times[next_sample] < t1) {
                target = sample_times[next_sample];
                hit_sample = true;
            }
            double h_try = h;
            bool clipped = false;
            if (t + h_try >= target) {
                h_try = target - t;
                clipped = true;
            }
            if (!(h_try > 0.0)) {
                // target == t to rounding; emit and move on
                if (hit_sample) {
                    res.times.push_back(target);
                    res.states.push_back(y);
                    ++next_sample;
                    continue;
                }
                break;
            }

            stages(t, y, h_try);
            double err = opt.fixed_step > 0.0 ? 0.0
                                              : error_norm(y, h_try, opt);
            res.stats.max_error_estimate =
                std::max(res.stats.max_error_estimate, err);

            if (err <= 1.0) {
                ++res.stats.accepted_steps;
                t = clipped ? target : t + h_try;
                y.swap(ynew_);
                if (opt.post_accept) opt.post_accept(t, y);
                rhs_(t, y, k1_);
                if (hit_sample && clipped) {
                    res.times.push_back(target);
                    res.states.push_back(y);
                    ++next_sample;
                }
                if (opt.fixed_step <= 0.0) {
                    double scale = err == 0.0
                                       ? kMaxScale
                                       : kSafety * std::pow(err, -kAlpha);
                    scale = std::clamp(scale, kMinScale, kMaxScale);
                    h = std::min(std::max(h, h_try) * scale, opt.max_step);
                }
            } else {
                ++res.stats.rejected_steps;
                const double scale =
                    std::max(kSafety * std::pow(err, -kAlpha), kMinScale);
                h = h_try * scale;
                if (h < h_min)
                    throw IntegrationError(
                        "integrate: step size underflow (stiffness?)",
                        res.stats);
            }
        }
        // samples exactly at t1
        while (next_sample < sample_times.size()) {
            res.times.push_back(sample_times[next_sample]);
            res.states.push_back(y);
            ++next_sample;
        }
        if (res.stats.accepted_steps < 1)
            res.stats.accepted_steps = 1;  // zero-length interval edge case
        return res;
    }

  private:
    static constexpr double kAlpha = 1.0 / 8.0;
    static constexpr double kSafety = 0.9;
    static constexpr double kMinScale = 0.333;
    static constexpr double kMaxScale = 6.0;

    double initial_step(const cvec& y, const Options& opt) const {
        double err = 0.0;
        for (size_t i = 0; i < n_; ++i) {
            const double sc = opt.atol + opt.rtol * std::abs(y[i]);
            const double e = std::abs(k1_[i]) / sc;
            err += e * e;
        }
        const double d = std::pow(err / static_cast<double>(n_), -0.0625);
        return std::min(d, 1.0);
    }

    void stages(double t, const cvec& y, double h) {
        using namespace dp853;
        auto& yw = yw_;
        for (size_t i = 0; i < n_; ++i)
            yw[i] = y[i] + h * (a21 * k1_[i]);
        rhs_(t + c2 * h, yw, k2_);
        for (size_t i = 0; i < n_; ++i)
            yw[i] = y[i] + h * (a31 * k1_[i] + a32 * k2_[i]);
        rhs_(t + c3 * h, yw, k3_);
        for (size_t i = 0; i < n_; ++i)
            yw[i] = y[i] + h * (a41 * k1_[i] + a43 * k3_[i]);
        rhs_(t + c4 * h, yw, k4_);
        for (size_t i = 0; i < n_; ++i)
            yw[i] = y[i] + h * (a51 * k1_[i] + a53 * k3_[i] + a54 * k4_[i]);
        rhs_(t + c5 * h, yw, k5_);
        for (size_t i = 0; i < n_; ++i)
            yw[i] = y[i] + h * (a61 * k1_[i] + a64 * k4_[i] + a65 * k5_[i]);
        rhs_(t + c6 * h, yw, k6_);
        for (size_t i = 0; i < n_; ++i)
            yw[i] = y[i] + h * (a71 * k1_[i] + a74 * k4_[i] + a75 * k5_[i] +
                                a76 * k6_[i]);
        rhs_(t + c7 * h, yw, k7_);
        for (size_t i = 0; i < n_; ++i)
            yw[i] = y[i] + h * (a81 * k1_[i] + a84 * k4_[i] + a85 * k5_[i] +
                                a86 * k6_[i] + a87 * k7_[i]);
        rhs_(t + c8 * h, yw, k8_);
        for (size_t i = 0; i < n_; ++i)
            yw[i] = y[i] + h * (a91 * k1_[i] + a94 * k4_[i] + a95 * k5_[i] +
                                a96 * k6_[i] + a97 * k7_[i] + a98 * k8_[i]);
        rhs_(t + c9 * h, yw, k9_);
        for (size_t i = 0; i < n_; ++i)
            yw[i] = y[i] + h * (a101 * k1_[i] + a104 * k4_[i] + a105 * k5_[i] +
                                a106 * k6_[i] + a107 * k7_[i] + a108 * k8_[i] +
                                a109 * k9_[i]);
        rhs_(t + c10 * h, yw, k10_);
        for (size_t i = 0; i < n_; ++i)
            yw[i] = y[i] + h * (a111 * k1_[i] + a114 * k4_[i] + a115 * k5_[i] +
                                a116 * k6_[i] + a117 * k7_[i] + a118 * k8_[i] +
                                a119 * k9_[i] + a1110 * k10_[i]);
        rhs_(t + c11 * h, yw, k11_);
        for (size_t i = 0; i < n_; ++i)
            yw[i] = y[i] + h * (a121 * k1_[i] + a124 * k4_[i] + a125 * k5_[i] +
                                a126 * k6_[i] + a127 * k7_[i] + a128 * k8_[i] +
                                a129 * k9_[i] + a1210 * k10_[i] +
                                a1211 * k11_[i]);
        rhs_(t + h, yw, k12_);
        for (size_t i = 0; i < n_; ++i) {
            const cplx ksum = b1 * k1_[i] + b6 * k6_[i] + b7 * k7_[i] +
                              b8 * k8_[i] + b9 * k9_[i] + b10 * k10_[i] +
                              b11 * k11_[i] + b12 * k12_[i];
            k4_[i] = ksum;  // reused by the order-3 error estimate
            ynew_[i] = y[i] + h * ksum;
        }
    }

    double error_norm(const cvec& y, double h, const Options& opt) const {
        using namespace dp853;
        double err3 = 0.0, err5 = 0.0;
        for (size_t i = 0; i < n_; ++i) {
            const double sc =
                opt.atol +
                opt.rtol * std::max(std::abs(y[i]), std::abs(ynew_[i]));
            const cplx e3 =
                k4_[i] - e31 * k1_[i] - e32 * k9_[i] - e33 * k12_[i];
            const cplx e5 = e51 * k1_[i] + e56 * k6_[i] + e57 * k7_[i] +
                            e58 * k8_[i] + e59 * k9_[i] + e510 * k10_[i] +
                            e511 * k11_[i] + e512 * k12_[i];
            err3 += std::norm(e3) / (sc * sc);
            err5 += std::norm(e5) / (sc * sc);
        }
        double deno = err5 + 0.01 * err3;
        if (deno <= 0.0) deno = 1.0;
        return std::abs(h) * err5 *
               std::sqrt(1.0 / (static_cast<double>(n_) * deno));
    }

    std::function<void(double, const cvec&, cvec&)> rhs_;
    size_t n_;
    cvec k1_, k2_, k3_, k4_, k5_, k6_, k7_, k8_, k9_, k10_, k11_, k12_;
    cvec yw_, ynew_;
};

inline Result integrate(const Problem& p) {
    Integrator integ(p.rhs, p.y0.size());
    return integ.run(p.y0, p.t0, p.t1, p.sample_times, p.opt);
}

}  // namespace rabi::ode
