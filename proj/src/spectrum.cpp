#include "rfh/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rfh/special.hpp"

namespace rfh {

double ginibre_eigenvalue(int n, double rho, double R) {
    if (n < 0) throw std::invalid_argument("ginibre_eigenvalue: n must be >= 0");
    if (!(rho > 0.0) || !(R > 0.0))
        throw std::invalid_argument("ginibre_eigenvalue: rho and R must be > 0");
    return reg_gamma_lower(n + 1.0, std::numbers::pi * rho * R * R);
}

int truncation_index(double rho, double r, double tol) {
    if (!(tol > 0.0 && tol < 1.0))
        throw std::invalid_argument("truncation_index: tol must lie in (0,1)");
    const double a = std::numbers::pi * rho * r * r;
    if (a <= 0.0) return 0;

    auto lam = [&](int n) { return reg_gamma_lower(n + 1.0, a); };

    int n = static_cast<int>(std::ceil(a) + 10.0 * std::sqrt(a)) + 20;
    if (lam(n) < tol) {
        while (n > 0 && lam(n - 1) < tol) --n;
    } else {
        while (lam(n) >= tol) ++n;
    }
    return n;
}

double GinibreSpectrum::trace() const {
    double s = 0.0, c = 0.0;
    for (double v : eigenvalues) {  // Kahan; the trace identity test wants 1e-9 relative
        const double y = v - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

GinibreSpectrum GinibreSpectrum::build(double rho, double R, double tol) {
    GinibreSpectrum spec;
    spec.rho = rho;
    spec.R = R;
    const int N = truncation_index(rho, R, tol);
    spec.eigenvalues.reserve(N);
    const double a = std::numbers::pi * rho * R * R;
    for (int n = 0; n < N; ++n)
        spec.eigenvalues.push_back(reg_gamma_lower(n + 1.0, a));

    // Tail bound: extend until the ratio lambda_{n+1}/lambda_n ~ a/(n+1) is
    // safely below 1, then close with a geometric series.
    double tail = 0.0;
    int n = N;
    double lam = reg_gamma_lower(n + 1.0, a);
    while (lam > 0.0 && (n + 1.0) < 2.0 * a) {
        tail += lam;
        ++n;
        lam = reg_gamma_lower(n + 1.0, a);
        if (lam < 1e-280) break;
    }
    const double ratio = a / (n + 1.0);
    if (ratio < 1.0) tail += lam / (1.0 - ratio);
    spec.tail_sum_bound = tail;
    return spec;
}

}  // namespace rfh
