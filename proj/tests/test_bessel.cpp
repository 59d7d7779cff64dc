#include <catch_amalgamated.hpp>

#include <cmath>

#include "rabi/bessel.hpp"

using rabi::bessel_j;

TEST_CASE("leading series terms") {
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(1, 0.0) == 0.0);
    CHECK(bessel_j(2, 0.0) == 0.0);
}

TEST_CASE("J1 at the omega*T_pi = 50 working point") {
    // 30-term high-precision series oracle at x = pi/100
    CHECK(bessel_j(1, M_PI / 100.0) ==
          Catch::Approx(0.015706025455347435).epsilon(1e-14));
}

TEST_CASE("parity is exact as computed") {
    for (double x : {0.03, 0.21, 0.9, 3.7}) {
        for (int n = 0; n <= 4; ++n) {
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            CHECK(bessel_j(n, -x) == sign * bessel_j(n, x));
        }
    }
}

TEST_CASE("three-term recurrence J0 + J2 = (2/x) J1") {
    for (double x : {0.01, 0.1, 0.5}) {
        const double lhs = bessel_j(0, x) + bessel_j(2, x);
        const double rhs = (2.0 / x) * bessel_j(1, x);
        CHECK(lhs == Catch::Approx(rhs).margin(1e-12));
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(bessel_j(1, 10.5), rabi::BesselDomainError);
    CHECK_THROWS_AS(bessel_j(-1, 0.1), rabi::BesselDomainError);
    CHECK_THROWS_AS(bessel_j(9, 0.1), rabi::BesselDomainError);
}
