#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "rabi/qrm.hpp"

using namespace rabi;
using namespace rabi::qrm;

namespace {

std::vector<double> grid(double t1, double dt) {
    std::vector<double> ts;
    for (double t = 0.0; t < t1 + dt / 2; t += dt) ts.push_back(std::min(t, t1));
    ts.back() = t1;
    return ts;
}

cvec random_state(size_t dim, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss;
    cvec v(dim);
    double norm = 0.0;
    for (auto& a : v) {
        a = cplx(gauss(rng), gauss(rng));
        norm += std::norm(a);
    }
    for (auto& a : v) a /= std::sqrt(norm);
    return v;
}

}  // namespace

TEST_CASE("free frame: g = 0 gives zero derivative") {
    ModelParams p;
    p.alpha = 2.0;
    const FockWindow w{0, 12};
    const cvec st = random_state(2 * w.width(), 7);
    cvec d(st.size());
    apply_hamiltonian(p, w, 2, 0.37, st.data(), d.data());
    for (const auto& x : d) CHECK(std::abs(x) == 0.0);
}

TEST_CASE("Hamiltonian expectation value is real") {
    const ModelParams p = ModelParams::qrm(25.0);
    const FockWindow w = build_window(p.alpha, 1e-10);
    const size_t dim = 2 * w.width();
    cvec d(dim);
    for (unsigned seed = 0; seed < 100; ++seed) {
        const cvec st = random_state(dim, seed);
        apply_hamiltonian(p, w, 2, 0.9, st.data(), d.data());
        cplx exp_h{0.0, 0.0};  // <psi|H|psi> = i <psi|d>, d = -iH|psi>
        for (size_t i = 0; i < dim; ++i) exp_h += std::conj(st[i]) * d[i];
        exp_h *= cplx(0.0, 1.0);
        CHECK(std::abs(exp_h.imag()) < 1e-12);
    }
}

TEST_CASE("matrix elements against dense construction at width 10") {
    ModelParams p = ModelParams::qrm(25.0);
    p.Delta = 0.03;
    const FockWindow w{20, 29};
    const long W = w.width();
    const size_t dim = 2 * W;
    const double t = 0.7;
    // dense H from columns: H = i * (-iH)
    std::vector<cvec> H(dim, cvec(dim));
    cvec e(dim), d(dim);
    for (size_t j = 0; j < dim; ++j) {
        std::fill(e.begin(), e.end(), cplx{0.0, 0.0});
        e[j] = 1.0;
        apply_hamiltonian(p, w, 2, t, e.data(), d.data());
        for (size_t i = 0; i < dim; ++i) H[i][j] = cplx(0.0, 1.0) * d[i];
    }
    // Hermiticity
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j)
            CHECK(std::abs(H[i][j] - std::conj(H[j][i])) < 1e-14);
    // |g,n> couples to |e,n-1> with g sqrt(n) and to |e,n+1> with
    // g sqrt(n+1) e^{2 i t}
    const cplx e2 = std::exp(cplx(0.0, 2.0 * t));
    for (long n = w.n1 + 1; n <= w.n2 - 1; ++n) {
        const size_t col_g = n - w.n1;
        const size_t row_down = W + (n - 1 - w.n1);
        const size_t row_up = W + (n + 1 - w.n1);
        CHECK(std::abs(H[row_down][col_g] - p.g * std::sqrt(double(n))) <
              1e-14);
        CHECK(std::abs(H[row_up][col_g] -
                       p.g * std::sqrt(double(n + 1)) * e2) < 1e-14);
        // diagonal: -(Delta/2)(2k - 1)
        CHECK(std::abs(H[col_g][col_g] - cplx(p.Delta / 2.0, 0.0)) < 1e-14);
        CHECK(std::abs(H[W + col_g][W + col_g] + cplx(p.Delta / 2.0, 0.0)) <
              1e-14);
    }
}

TEST_CASE("excitation probability on the Dicke ladder") {
    FockWindow w{0, 4};
    JointState st;
    st.window = w;

    SECTION("ground level gives 0, top level gives 1") {
        st.n_levels = 3;
        st.amplitudes.assign(3 * w.width(), cplx{0.0, 0.0});
        st.at(0, 2) = 1.0;
        CHECK(excitation_probability(st) == 0.0);
        st.at(0, 2) = 0.0;
        st.at(2, 2) = 1.0;
        CHECK(excitation_probability(st) == Catch::Approx(1.0).margin(1e-15));
    }
    SECTION("N = 2, uniform over k in {0,1,2}") {
        st.n_levels = 3;
        st.amplitudes.assign(3 * w.width(), cplx{0.0, 0.0});
        const double s = 1.0 / std::sqrt(3.0);
        st.at(0, 1) = s;
        st.at(1, 1) = s;
        st.at(2, 1) = s;
        CHECK(excitation_probability(st) ==
              Catch::Approx(0.5).margin(1e-15));
    }
}

TEST_CASE("Dicke raising matrix elements") {
    CHECK(dicke_raise(1, 0) == Catch::Approx(1.0));
    CHECK(dicke_raise(2, 0) == Catch::Approx(std::sqrt(2.0)));
    CHECK(dicke_raise(2, 1) == Catch::Approx(std::sqrt(2.0)));
    CHECK(dicke_raise(3, 1) == Catch::Approx(2.0));
}

TEST_CASE("coherent survival of a Fock state is the Poisson weight") {
    const double alpha = std::sqrt(5.0);
    const FockWindow w = build_window(alpha, 1e-10);
    const cvec coh = coherent_amplitudes(alpha, w);
    JointState st;
    st.window = w;
    st.n_levels = 2;
    st.amplitudes.assign(2 * w.width(), cplx{0.0, 0.0});
    const long m = 5;
    st.at(0, m) = 1.0;
    const double want = std::exp(-5.0) * std::pow(5.0, m) / 120.0;  // m! = 120
    CHECK(coherent_survival(st, coh) == Catch::Approx(want).epsilon(1e-9));
}

TEST_CASE("entanglement entropies") {
    const FockWindow w{0, 9};
    JointState st;
    st.window = w;
    st.n_levels = 2;

    SECTION("product state has zero entropies") {
        st.amplitudes.assign(2 * w.width(), cplx{0.0, 0.0});
        st.at(0, 3) = 1.0;
        const auto e = entanglement_entropies(st);
        CHECK(std::abs(e.s_q) < 1e-14);
        CHECK(std::abs(e.s_q_linear) < 1e-14);
        CHECK(std::abs(e.s_f_linear) < 1e-14);
    }
    SECTION("Bell-like state reaches the maxima") {
        st.amplitudes.assign(2 * w.width(), cplx{0.0, 0.0});
        const double s = 1.0 / std::sqrt(2.0);
        st.at(0, 2) = s;
        st.at(1, 7) = s;
        const auto e = entanglement_entropies(st);
        CHECK(e.s_q == Catch::Approx(std::log(2.0)).epsilon(1e-12));
        CHECK(e.s_f_linear == Catch::Approx(0.5).epsilon(1e-12));
        CHECK(e.s_q_linear == Catch::Approx(0.5).epsilon(1e-12));
    }
    SECTION("non-normalized states are rejected") {
        st.amplitudes.assign(2 * w.width(), cplx{0.0, 0.0});
        st.at(0, 0) = 0.5;
        CHECK_THROWS_AS(entanglement_entropies(st), StateIntegrityError);
    }
}

TEST_CASE("unitary evolution invariants at alpha^2 = 50") {
    const ModelParams p = ModelParams::qrm(50.0);
    const auto ts = grid(500.0, 10.0);
    const auto r = evolve_qrm(p, ts);
    REQUIRE(r.size() == ts.size());
    for (size_t i = 0; i < r.size(); ++i) {
        const auto& o = r.rec[i];
        CHECK(o.p_e >= -1e-10);
        CHECK(o.p_e <= 1.0 + 1e-9);
        double mass = 0.0;
        for (double pn : o.photon_dist) mass += pn;
        CHECK(std::abs(mass - 1.0) < 1e-8);  // norm conservation
        // Schmidt identity for the pure 1-qubit state
        CHECK(std::abs(o.s_q_linear - o.s_f_linear) < 1e-10);
        CHECK(o.p_alpha_survival >= -1e-10);
        CHECK(o.p_alpha_survival <= 1.0 + 1e-9);
    }
    CHECK(r.rec[0].p_e == Catch::Approx(0.0).margin(1e-12));
    CHECK(r.rec[0].p_alpha_survival == Catch::Approx(1.0).margin(1e-9));
    // first maximum near t = T_pi = 50 transfers nearly all population
    CHECK(r.rec[5].p_e > 0.95);
}

TEST_CASE("window overflow is reported with a suggestion") {
    const ModelParams p = ModelParams::qrm(50.0);
    EvolveConfig cfg;
    cfg.leakage_limit = 1e-30;  // impossible demand
    try {
        evolve_qrm(p, grid(50.0, 25.0), cfg);
        FAIL("expected WindowOverflowError");
    } catch (const WindowOverflowError& e) {
        const FockWindow w = build_window(p.alpha, cfg.fock_cutoff);
        CHECK(e.suggested.n1 <= w.n1);
        CHECK(e.suggested.n2 > w.n2);
    }
}

TEST_CASE("Dicke ladder matches the two-qubit product basis") {
    // independent 2-qubit integration in the basis (gg, ge, eg, ee)
    const ModelParams p = ModelParams::qrm(50.0, 1e-2 * M_PI, 2);
    const FockWindow w = build_window(p.alpha, 1e-10);
    const long W = w.width();
    const double g = p.g;

    auto rhs = [&](double t, const cvec& y, cvec& dy) {
        const cplx e2 = std::exp(cplx(0.0, 2.0 * t));
        const cplx e2c = std::conj(e2);
        // levels: 0 = gg, 1 = ge, 2 = eg, 3 = ee; qubit 1 flips 0<->2, 1<->3;
        // qubit 2 flips 0<->1, 2<->3. Raising a qubit couples a sqrt(n+1)
        // (co-rotating) and a† sqrt(n) e^{2it} (counter-rotating).
        auto at = [&](const cvec& v, int lvl, long j) -> cplx {
            if (j < 0 || j >= W) return {0.0, 0.0};
            return v[static_cast<size_t>(lvl) * W + j];
        };
        for (int lvl = 0; lvl < 4; ++lvl)
            for (long j = 0; j < W; ++j) {
                cplx h{0.0, 0.0};
                const double sq_n = std::sqrt(double(w.n1 + j));
                const double sq_np1 = std::sqrt(double(w.n1 + j + 1));
                for (int q = 0; q < 2; ++q) {
                    const int bit = q == 0 ? 2 : 1;
                    const int partner = lvl ^ bit;
                    if (lvl & bit) {
                        // this qubit is excited: it was raised from partner
                        h += g * sq_np1 * at(y, partner, j + 1);
                        h += g * sq_n * e2 * at(y, partner, j - 1);
                    } else {
                        // this qubit is ground: lowered from partner
                        h += g * sq_n * at(y, partner, j - 1);
                        h += g * sq_np1 * e2c * at(y, partner, j + 1);
                    }
                }
                dy[static_cast<size_t>(lvl) * W + j] = cplx(0.0, -1.0) * h;
            }
    };

    const auto ts = grid(500.0, 25.0);
    ode::Problem prob;
    prob.rhs = rhs;
    prob.y0.assign(4 * W, cplx{0.0, 0.0});
    const cvec coh = coherent_amplitudes(p.alpha, w);
    std::copy(coh.begin(), coh.end(), prob.y0.begin());
    prob.t0 = 0.0;
    prob.t1 = ts.back();
    prob.sample_times = ts;
    auto prod = ode::integrate(prob);

    const auto dicke = evolve_qrm(p, ts);
    for (size_t i = 0; i < ts.size(); ++i) {
        // average single-qubit excitation in the product basis
        double pe = 0.0;
        for (long j = 0; j < W; ++j) {
            pe += 0.5 * std::norm(prod.states[i][1 * W + j]);
            pe += 0.5 * std::norm(prod.states[i][2 * W + j]);
            pe += std::norm(prod.states[i][3 * W + j]);
        }
        CHECK(std::abs(pe - dicke.rec[i].p_e) < 1e-9);
    }
}
