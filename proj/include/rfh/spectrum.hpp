#pragma once

#include <vector>

namespace rfh {

// n-th eigenvalue of the Ginibre kernel restricted to B(0,R) at density rho:
// lambda_n = P(n+1, pi*rho*R^2), the regularized lower incomplete gamma.
double ginibre_eigenvalue(int n, double rho, double R);

// Smallest N such that lambda_N < tol. Search starts near the spectral edge
// at ceil(pi*rho*r^2) + 10*sqrt(pi*rho*r^2) + 20 and walks to the threshold,
// so every neglected eigenvalue contributes a factor within tol of 1.
int truncation_index(double rho, double r, double tol);

// All eigenvalues above the truncation tolerance, plus a geometric bound on
// the neglected tail sum (the eigenvalues decay superexponentially past the
// edge).
struct GinibreSpectrum {
    double rho = 0.0;
    double R = 0.0;
    std::vector<double> eigenvalues;  // lambda_0 .. lambda_{N-1}, decreasing
    double tail_sum_bound = 0.0;      // upper bound on sum_{n>=N} lambda_n

    int size() const { return static_cast<int>(eigenvalues.size()); }
    double trace() const;  // sum of retained eigenvalues

    static GinibreSpectrum build(double rho, double R, double tol = 1e-14);
};

}  // namespace rfh
