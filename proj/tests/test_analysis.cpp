#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "rabi/analysis.hpp"

using namespace rabi::analysis;

namespace {

std::pair<std::vector<double>, std::vector<double>> sampled(
    double t1, double dt, const std::function<double(double)>& f) {
    std::vector<double> t, v;
    for (double x = 0.0; x <= t1 + dt / 2; x += dt) {
        t.push_back(x);
        v.push_back(f(x));
    }
    return {t, v};
}

}  // namespace

TEST_CASE("envelope of sin^2(Gt/2) peaks at odd multiples of T_pi") {
    const double G = M_PI / 50.0;
    auto [t, v] = sampled(500.0, 1.0, [G](double x) {
        const double s = std::sin(G * x / 2.0);
        return s * s;
    });
    const auto env = extract_envelope(t, v);
    REQUIRE(env.size() == 5);
    for (size_t i = 0; i < env.size(); ++i) {
        CHECK(env.times[i] ==
              Catch::Approx((2.0 * i + 1.0) * 50.0).margin(1.0));
        CHECK(env.values[i] == Catch::Approx(1.0).margin(1e-4));
    }
}

TEST_CASE("constant series has an empty envelope") {
    auto [t, v] = sampled(10.0, 0.5, [](double) { return 0.3; });
    CHECK(extract_envelope(t, v).size() == 0);
}

TEST_CASE("small ripples below the prominence floor are suppressed") {
    auto [t, v] = sampled(100.0, 0.1, [](double x) {
        return std::sin(0.05 * x) + 1e-4 * std::sin(7.0 * x);
    });
    const auto env = extract_envelope(t, v, 1e-3);
    CHECK(env.size() == 1);  // only the slow crest survives
}

TEST_CASE("short series are rejected") {
    std::vector<double> t{0.0, 1.0}, v{0.0, 1.0};
    CHECK_THROWS_AS(extract_envelope(t, v), AnalysisInputError);
}

TEST_CASE("collapse time of a synthetic exponential envelope") {
    const double tau = 200.0;
    Envelope env;
    for (int i = 0; i < 40; ++i) {
        env.times.push_back(10.0 * i);
        env.values.push_back(std::exp(-10.0 * i / tau));
    }
    const auto tc = collapse_time(env, 0.6);
    REQUIRE(tc.has_value());
    CHECK(*tc == Catch::Approx(tau * std::log(1.0 / 0.6)).margin(10.0));
}

TEST_CASE("a non-collapsing envelope reports no crossing") {
    Envelope env;
    for (int i = 0; i < 10; ++i) {
        env.times.push_back(double(i));
        env.values.push_back(0.95);
    }
    CHECK_FALSE(collapse_time(env, 0.6).has_value());
}

TEST_CASE("photon delta basics") {
    std::vector<double> ref{0.2, 0.5, 0.3};
    SECTION("identical distributions give zeros") {
        const auto pd = photon_delta(ref, ref);
        for (double d : pd.delta) CHECK(d == 0.0);
    }
    SECTION("window mismatch is an input error") {
        std::vector<double> cur{0.2, 0.8};
        CHECK_THROWS_AS(photon_delta(ref, cur), AnalysisInputError);
    }
    SECTION("unequal normalization is an input error") {
        std::vector<double> cur{0.2, 0.5, 0.4};
        CHECK_THROWS_AS(photon_delta(ref, cur), AnalysisInputError);
    }
    SECTION("differences sum to zero") {
        std::vector<double> cur{0.25, 0.45, 0.3};
        const auto pd = photon_delta(ref, cur);
        double s = 0.0;
        for (double d : pd.delta) s += d;
        CHECK(std::abs(s) < 1e-12);
        CHECK(pd.delta[0] == Catch::Approx(0.05));
    }
}
