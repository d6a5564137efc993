#pragma once

// Test-only reference implementations, kept deliberately independent of the
// code paths they check: direct quadrature instead of series/continued
// fractions, power series instead of rational fits, plain Monte Carlo
// instead of reduced quadrature.

#include <cmath>
#include <functional>
#include <stdexcept>

#include "rfh/rng.hpp"

namespace oracle {

inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double fa, double fm, double fb, double whole, double tol,
                                   int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::fabs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-13) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 60);
}

// P(s,x) by direct integration of the scaled integrand exp(-t + (s-1) ln t - ln Gamma(s)).
inline double reg_gamma_lower(double s, double x) {
    if (x <= 0.0) return 0.0;
    const double lg = std::lgamma(s);
    auto f = [&](double t) {
        if (t <= 0.0) return s > 1.0 ? 0.0 : (s == 1.0 ? std::exp(-lg) : 0.0);
        return std::exp(-t + (s - 1.0) * std::log(t) - lg);
    };
    return adaptive_simpson(f, 0.0, x, 1e-14);
}

// e^{-x} I0(x) by the defining power series.
inline double bessel_i0e_series(double x) {
    const double ax = std::fabs(x);
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 2000; ++k) {
        const double r = ax / (2.0 * k);
        term *= r * r;
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return sum * std::exp(-ax);
}

// Plain 4D Monte Carlo for iint_{B(0,R)^2} w(|x|) w(|y|) e^{-pi rho |x-y|^2} dx dy.
struct Mc4dResult {
    double value;
    double std_error;
};

inline Mc4dResult mc4d_pair_integral(double rho, double R,
                                     const std::function<double(double)>& w, std::size_t n,
                                     std::uint64_t seed) {
    rfh::Rng rng(seed);
    const double pi = 3.14159265358979323846;
    double s = 0.0, s2 = 0.0, c = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r1 = R * std::sqrt(rng.uniform());
        const double t1 = 2.0 * pi * rng.uniform();
        const double r2 = R * std::sqrt(rng.uniform());
        const double t2 = 2.0 * pi * rng.uniform();
        const double dx = r1 * std::cos(t1) - r2 * std::cos(t2);
        const double dy = r1 * std::sin(t1) - r2 * std::sin(t2);
        const double v = w(r1) * w(r2) * std::exp(-pi * rho * (dx * dx + dy * dy));
        const double y = v - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
        s2 += v * v;
    }
    const double area2 = (pi * R * R) * (pi * R * R);
    const double mean = s / n;
    const double var = s2 / n - mean * mean;
    return {mean * area2, area2 * std::sqrt(var / n)};
}

// Set covariance of the disc B(0,R): |B cap (B + t)| for separation t.
inline double disc_set_covariance(double t, double R) {
    if (t >= 2.0 * R) return 0.0;
    const double h = t / (2.0 * R);
    return 2.0 * R * R * std::acos(h) - 0.5 * t * std::sqrt(4.0 * R * R - t * t);
}

}  // namespace oracle
