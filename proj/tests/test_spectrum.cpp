#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "rfh/spectrum.hpp"

using namespace rfh;

TEST_CASE("eigenvalue closed forms") {
    // lambda_0 = 1 - e^{-pi rho R^2}
    for (auto [rho, R] : {std::pair{0.05, 10.0}, {0.3, 2.0}, {1.0, 1.0}}) {
        const double a = std::numbers::pi * rho * R * R;
        CHECK(ginibre_eigenvalue(0, rho, R) == doctest::Approx(-std::expm1(-a)).epsilon(1e-13));
    }
    // fixed n, large mass: lambda -> 1
    CHECK(ginibre_eigenvalue(3, 2.0, 10.0) == doctest::Approx(1.0).epsilon(1e-13));

    // n=5, rho=0.3, R=10 (a = 94.25) against direct integration of the
    // defining integral
    const double ref = oracle::reg_gamma_lower(6.0, std::numbers::pi * 0.3 * 100.0);
    CHECK(ginibre_eigenvalue(5, 0.3, 10.0) == doctest::Approx(ref).epsilon(1e-12));
    CHECK(ginibre_eigenvalue(5, 0.3, 10.0) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(ginibre_eigenvalue(-1, 0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ginibre_eigenvalue(0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("eigenvalues decrease strictly in n") {
    const double rho = 0.1, R = 5.64;  // a ~ 10
    double prev = ginibre_eigenvalue(0, rho, R);
    CHECK(prev > 0.0);
    CHECK(prev < 1.0);
    for (int n = 1; n <= 50; ++n) {
        const double lam = ginibre_eigenvalue(n, rho, R);
        CHECK(lam < prev);
        prev = lam;
    }
}

TEST_CASE("truncation index against exhaustive scan") {
    auto scan = [](double rho, double r, double tol) {
        int n = 0;
        while (ginibre_eigenvalue(n, rho, r) >= tol) ++n;
        return n;
    };

    CHECK(truncation_index(0.3, 0.0, 1e-12) == 0);

    for (auto [rho, r, tol] : {std::tuple{0.05, 2.74, 1e-12}, {0.3, 10.0, 1e-14},
                               {0.01, 1.0, 1e-10}, {1.0, 5.0, 1e-14}}) {
        const int N = truncation_index(rho, r, tol);
        CHECK(N == scan(rho, r, tol));
        if (N > 0) CHECK(ginibre_eigenvalue(N - 1, rho, r) >= tol);
        CHECK(ginibre_eigenvalue(N, rho, r) < tol);
    }

    // at tol = 1/2 the threshold sits at the Poisson-like median, so N ~ a
    for (double a : {50.0, 94.25, 200.0, 400.0}) {
        const double r = std::sqrt(a / (std::numbers::pi * 0.3));
        const int N = truncation_index(0.3, r, 0.5);
        CHECK(N == scan(0.3, r, 0.5));
        CHECK(std::fabs(N - a) <= 2.0);
    }

    CHECK_THROWS_AS(truncation_index(0.1, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(truncation_index(0.1, 1.0, 1.5), std::invalid_argument);
}

TEST_CASE("trace identity: sum of eigenvalues = rho pi R^2") {
    for (auto [rho, R] : {std::pair{0.05, 10.0}, {0.3, 10.0}, {1.0, 5.0}, {0.01, 3.0}}) {
        const auto spec = GinibreSpectrum::build(rho, R, 1e-14);
        const double a = std::numbers::pi * rho * R * R;
        CHECK(spec.trace() == doctest::Approx(a).epsilon(1e-9));
        CHECK(spec.tail_sum_bound < 1e-9);
        CHECK(spec.tail_sum_bound >= 0.0);
        // retained spectrum undershoots the full trace (up to summation rounding)
        CHECK(spec.trace() <= a * (1.0 + 1e-12));
        for (double lam : spec.eigenvalues) {
            CHECK(lam > 0.0);
            CHECK(lam <= 1.0);
        }
    }
}
