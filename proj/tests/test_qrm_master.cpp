#include <catch_amalgamated.hpp>

#include <cmath>

#include "rabi/qrm.hpp"
#include "rabi/qrm_master.hpp"

using namespace rabi;
using namespace rabi::qrm_master;

namespace {

std::vector<double> grid(double t1, double dt) {
    std::vector<double> ts;
    for (double t = 0.0; t < t1 + dt / 2; t += dt) ts.push_back(std::min(t, t1));
    ts.back() = t1;
    return ts;
}

}  // namespace

TEST_CASE("rates zero: master matches the unitary engine") {
    const ModelParams p = ModelParams::qrm(50.0);
    const auto ts = grid(150.0, 12.5);
    MasterConfig cfg;
    cfg.opt.rtol = 1e-9;
    cfg.opt.atol = 1e-11;
    const auto m = evolve_master_qrm(p, ts, cfg);
    const auto u = qrm::evolve_qrm(p, ts);
    for (size_t i = 0; i < ts.size(); ++i) {
        CHECK(std::abs(m.rec[i].p_e - u.rec[i].p_e) < 1e-6);
        CHECK(std::abs(m.rec[i].delta_n - u.rec[i].delta_n) < 1e-5);
        CHECK(std::abs(m.rec[i].s_f_linear - u.rec[i].s_f_linear) < 1e-6);
        CHECK(std::abs(m.rec[i].p_alpha_survival -
                       u.rec[i].p_alpha_survival) < 1e-6);
    }
}

TEST_CASE("undriven cavity decay: <n>(t) = alpha^2 e^{-kappa t}") {
    ModelParams p;
    p.alpha = std::sqrt(10.0);
    p.kappa = 0.01;
    const auto ts = grid(100.0, 20.0);
    const auto m = evolve_master_qrm(p, ts);
    for (size_t i = 0; i < ts.size(); ++i) {
        const double nbar = 10.0 + m.rec[i].delta_n;
        const double want = 10.0 * std::exp(-p.kappa * ts[i]);
        CHECK(std::abs(nbar - want) / want < 1e-4);
    }
}

TEST_CASE("trace is conserved within 1e-8 over 1e3 time units") {
    ModelParams p = ModelParams::qrm(20.0);
    p.gamma = 1e-4;
    p.gamma_phi = 1e-4;
    p.kappa = 1e-5;
    p.n_th = 0.05;
    p.n_c = 0.05;
    const auto ts = grid(1000.0, 250.0);
    MasterConfig cfg;
    cfg.opt.rtol = 1e-9;
    cfg.opt.atol = 1e-11;
    const auto m = evolve_master_qrm(p, ts, cfg);
    for (const auto& o : m.rec) {
        double tr = 0.0;
        for (double pn : o.photon_dist) tr += pn;
        CHECK(std::abs(tr - 1.0) < 1e-8);
        CHECK(o.p_e >= -1e-9);
        CHECK(o.p_e <= 1.0 + 1e-9);
        CHECK(o.s_q_linear >= -1e-9);
        CHECK(o.s_f_linear >= -1e-9);
    }
}

TEST_CASE("qubit dissipation damps the Rabi envelope") {
    ModelParams p = ModelParams::qrm(20.0);
    p.gamma = 2e-3;
    p.n_th = 0.05;
    const auto ts = grid(500.0, 25.0);
    MasterConfig cfg;
    cfg.opt.rtol = 1e-8;
    cfg.opt.atol = 1e-10;
    const auto damped = evolve_master_qrm(p, ts, cfg);
    ModelParams p0 = ModelParams::qrm(20.0);
    const auto unitary = evolve_master_qrm(p0, ts, cfg);
    // at the first maximum (t = T_pi = 50) the damped p_e is lower
    CHECK(damped.rec[2].p_e < unitary.rec[2].p_e - 1e-4);
}

TEST_CASE("guards") {
    SECTION("multi-qubit master is rejected") {
        const ModelParams p = ModelParams::qrm(20.0, 1e-2 * M_PI, 2);
        CHECK_THROWS_AS(evolve_master_qrm(p, grid(10.0, 5.0)), ParameterError);
    }
    SECTION("cost guard on alpha^2") {
        const ModelParams p = ModelParams::qrm(500.0);
        CHECK_THROWS_AS(evolve_master_qrm(p, grid(10.0, 5.0)), ParameterError);
    }
    SECTION("boundary trace leakage raises a window overflow") {
        const ModelParams p = ModelParams::qrm(20.0);
        MasterConfig cfg;
        cfg.leakage_limit = 1e-30;
        CHECK_THROWS_AS(evolve_master_qrm(p, grid(20.0, 10.0), cfg),
                        qrm::WindowOverflowError);
    }
}
