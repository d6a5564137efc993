#include "rfh/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rfh/special.hpp"

namespace rfh {

namespace {

// Gauss-Legendre abscissae/weights on [-1,1].
const double kX8[8] = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
     0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
const double kW8[8] = {
     0.1012285362903763,  0.2223810344533745,  0.3137066458778873,  0.3626837833783620,
     0.3626837833783620,  0.3137066458778873,  0.2223810344533745,  0.1012285362903763};

const double kX16[16] = {
    -0.9894009349916499, -0.9445750230732326, -0.8656312023878318, -0.7554044083550030,
    -0.6178762444026438, -0.4580167776572274, -0.2816035507792589, -0.0950125098376374,
     0.0950125098376374,  0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
     0.7554044083550030,  0.8656312023878318,  0.9445750230732326,  0.9894009349916499};
const double kW16[16] = {
     0.0271524594117541,  0.0622535239386479,  0.0951585116824928,  0.1246289712555339,
     0.1495959888165767,  0.1691565193950025,  0.1826034150449236,  0.1894506104550685,
     0.1894506104550685,  0.1826034150449236,  0.1691565193950025,  0.1495959888165767,
     0.1246289712555339,  0.0951585116824928,  0.0622535239386479,  0.0271524594117541};

struct Nodes {
    std::vector<double> x16, f16;  // f = w(x) * x precomputed per node
    std::vector<double> x8, f8;
    double half = 0.0;             // panel half-width (weight scale)
};

}  // namespace

QuadResult planar_gaussian_pair_integral(double rho, double R,
                                         const std::function<double(double)>& w,
                                         double inner_scale, double tol_abs,
                                         int max_panels) {
    if (!(rho > 0.0) || !(R > 0.0))
        throw std::invalid_argument("planar_gaussian_pair_integral: rho, R must be > 0");

    // geometric seed panels: [0,s], [s,2s], ... doubling up to R
    std::vector<double> edges{0.0};
    double s = std::max(inner_scale, R * 1e-6);
    while (s < R) {
        edges.push_back(s);
        s *= 2.0;
    }
    edges.push_back(R);

    const double c = std::numbers::pi * rho;
    const double scale = 4.0 * std::numbers::pi * std::numbers::pi;

    auto build_nodes = [&](double a, double b) {
        Nodes nd;
        nd.half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        nd.x16.resize(16);
        nd.f16.resize(16);
        for (int i = 0; i < 16; ++i) {
            nd.x16[i] = mid + nd.half * kX16[i];
            nd.f16[i] = w(nd.x16[i]) * nd.x16[i];
        }
        nd.x8.resize(8);
        nd.f8.resize(8);
        for (int i = 0; i < 8; ++i) {
            nd.x8[i] = mid + nd.half * kX8[i];
            nd.f8[i] = w(nd.x8[i]) * nd.x8[i];
        }
        return nd;
    };

    QuadResult res;
    for (int iter = 0;; ++iter) {
        const int np = static_cast<int>(edges.size()) - 1;
        std::vector<Nodes> nodes(np);
        for (int i = 0; i < np; ++i) nodes[i] = build_nodes(edges[i], edges[i + 1]);

        double total = 0.0, err_total = 0.0;
        std::vector<double> panel_err(np, 0.0);
        for (int pi = 0; pi < np; ++pi) {
            for (int pj = 0; pj < np; ++pj) {
                const Nodes& A = nodes[pi];
                const Nodes& B = nodes[pj];
                double i16 = 0.0;
                for (int a = 0; a < 16; ++a) {
                    const double ra = A.x16[a];
                    const double fa = A.f16[a] * kW16[a];
                    for (int b = 0; b < 16; ++b) {
                        const double rb = B.x16[b];
                        const double d = ra - rb;
                        const double g = std::exp(-c * d * d) * bessel_i0e(2.0 * c * ra * rb);
                        i16 += fa * kW16[b] * B.f16[b] * g;
                    }
                }
                i16 *= A.half * B.half;
                double i8 = 0.0;
                for (int a = 0; a < 8; ++a) {
                    const double ra = A.x8[a];
                    const double fa = A.f8[a] * kW8[a];
                    for (int b = 0; b < 8; ++b) {
                        const double rb = B.x8[b];
                        const double d = ra - rb;
                        const double g = std::exp(-c * d * d) * bessel_i0e(2.0 * c * ra * rb);
                        i8 += fa * kW8[b] * B.f8[b] * g;
                    }
                }
                i8 *= A.half * B.half;
                const double e = std::fabs(i16 - i8);
                total += i16;
                err_total += e;
                panel_err[pi] += 0.5 * e;
                panel_err[pj] += 0.5 * e;
            }
        }

        res.value = scale * total;
        res.error = scale * err_total;
        res.panels = np;
        if (res.error <= tol_abs) {
            res.converged = true;
            return res;
        }
        if (np >= max_panels || iter > 64) return res;  // caller decides what to do

        // split the worst panel
        const int worst = static_cast<int>(
            std::max_element(panel_err.begin(), panel_err.end()) - panel_err.begin());
        edges.insert(edges.begin() + worst + 1,
                     0.5 * (edges[worst] + edges[worst + 1]));
    }
}

}  // namespace rfh
