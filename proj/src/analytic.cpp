#include "rfh/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "rfh/quadrature.hpp"
#include "rfh/special.hpp"
#include "rfh/spectrum.hpp"

namespace rfh {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
constexpr double kResidualLimit = 1e-9;
constexpr double kEigTol = 1e-14;

// rho_c * beta * P_S * G_S * G_H * lambda^2 / (4 pi)^2
double friis_coeff(const PhysicalParams& p, const Architecture& arch) {
    const double lam2 = p.wavelength_m * p.wavelength_m;
    return arch.harvest_coeff() * p.rf_dc_eff * p.tx_power_w * p.tx_gain * p.rx_gain *
           lam2 / (16.0 * kPi * kPi);
}

double logaddexp(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double m = std::max(a, b);
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

// log(2^x - 1) for x > 0, stable for both tiny and huge x
double log_pow2m1(double x) {
    if (x <= 0.0) return -std::numeric_limits<double>::infinity();
    const double t = x * kLn2;
    if (t < 30.0) return std::log(std::expm1(t));
    return t + std::log1p(-std::exp(-t));
}

struct GoldenResult {
    double x;
    double f;
};

// golden-section maximization on [a,b]
template <typename F>
GoldenResult golden_max(F&& f, double a, double b, double xtol) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > xtol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

}  // namespace

double harvest_rate_point(double distance_norm, const PhysicalParams& p,
                          const Architecture& arch) {
    if (distance_norm < 0.0)
        throw std::invalid_argument("harvest_rate_point: distance must be >= 0");
    const double d = p.min_dist_m + distance_norm;
    return friis_coeff(p, arch) / (d * d);
}

double aggregate_harvest(const PointConfiguration& cfg, const PhysicalParams& p,
                         const Architecture& arch) {
    const double coeff = friis_coeff(p, arch);
    double s = 0.0, comp = 0.0;
    for (const auto& pt : cfg.points) {
        const double d = p.min_dist_m + pt.norm();
        const double y = coeff / (d * d) - comp;
        const double t = s + y;
        comp = (t - s) - y;
        s = t;
    }
    return s;
}

double max_rate(double aggregate_harvest_w, const PhysicalParams& p,
                const Architecture& arch) {
    if (aggregate_harvest_w < 0.0)
        throw std::invalid_argument("max_rate: P_H must be >= 0");
    const double eta = arch.transmit_coeff();
    if (eta <= 0.0) return 0.0;
    const double surplus = std::max(aggregate_harvest_w - p.circuit_power_w, 0.0);
    const double denom = eta * (arch.xi * aggregate_harvest_w + p.noise_w);
    return eta * p.bandwidth_hz * std::log2(1.0 + p.h0() * surplus / denom);
}

MomentResult expected_harvest(const PhysicalParams& p, const Architecture& arch,
                              const SpatialModel& model) {
    p.validate();
    arch.validate();
    model.validate();
    const double coeff = friis_coeff(p, arch);
    const double eps = p.min_dist_m;
    const double R = model.radius;
    MomentResult r;
    r.mean = 2.0 * kPi * coeff * model.density *
             (eps / (R + eps) + std::log(R + eps) - 1.0 - std::log(eps));
    r.approx_mean = 2.0 * kPi * coeff * model.density * std::log(R / eps);
    return r;
}

MomentResult variance_harvest(const PhysicalParams& p, const Architecture& arch,
                              const SpatialModel& model) {
    p.validate();
    arch.validate();
    model.validate();
    MomentResult r = expected_harvest(p, arch, model);
    const double coeff = friis_coeff(p, arch);
    const double eps = p.min_dist_m;
    const double R = model.radius;
    const double first = coeff * coeff * 2.0 * kPi * model.density *
                         (1.0 / (6.0 * eps * eps) -
                          (3.0 * R + eps) / (6.0 * std::pow(R + eps, 3)));
    if (model.is_ppp()) {
        r.variance = first;  // alpha = 0, no repulsion correction
        return r;
    }
    const double pref = coeff * coeff * model.density * model.density / model.j;
    const double tol_abs = 1e-3 * first / pref;
    const QuadResult q = planar_gaussian_pair_integral(
        model.density, R, [eps](double t) { return 1.0 / ((eps + t) * (eps + t)); },
        0.5 * eps, tol_abs);
    if (!q.converged)
        throw std::runtime_error(
            "variance_harvest: repulsion-term quadrature did not converge");
    r.variance = first - pref * q.value;
    r.quadrature_error_estimate = pref * q.error;
    return r;
}

BoundResult hole_probability_detailed(double r, const SpatialModel& model) {
    if (r < 0.0) throw std::invalid_argument("hole_probability: r must be >= 0");
    model.validate();
    BoundResult b;
    const double reff = std::min(r, model.radius);
    b.critical_radius = r;
    if (reff <= 0.0) {
        b.value = 1.0;
        return b;
    }
    if (model.is_ppp()) {
        b.value = std::exp(-kPi * model.density * reff * reff);
        return b;
    }
    const GinibreSpectrum spec = GinibreSpectrum::build(model.density, reff, kEigTol);
    const double j = model.j;
    double logp = 0.0;
    for (double lam : spec.eigenvalues) logp += std::log1p(-lam / j);
    b.value = std::exp(j * logp);
    b.truncation_N = spec.size();
    b.truncation_residual = spec.tail_sum_bound * j;  // bound on the log-product tail
    if (b.truncation_residual >= kResidualLimit)
        throw std::runtime_error("hole_probability: truncation residual above 1e-9");
    return b;
}

double hole_probability(double r, const SpatialModel& model) {
    return hole_probability_detailed(r, model).value;
}

double critical_radius_power(const PhysicalParams& p, const Architecture& arch) {
    if (!(p.circuit_power_w > 0.0))
        throw std::invalid_argument("critical_radius_power: P_C must be > 0");
    const double num = arch.harvest_coeff() * p.rf_dc_eff * p.tx_power_w * p.tx_gain * p.rx_gain;
    return p.wavelength_m / (4.0 * kPi) * std::sqrt(num / p.circuit_power_w);
}

BoundResult power_outage_bound(const PhysicalParams& p, const Architecture& arch,
                               const SpatialModel& model) {
    p.validate();
    arch.validate();
    const double gamma = critical_radius_power(p, arch);
    BoundResult b = hole_probability_detailed(gamma, model);
    b.critical_radius = gamma;
    b.eps_warning = !(p.min_dist_m < gamma / 10.0);
    return b;
}

CriticalRadius critical_radius_transmission(const PhysicalParams& p,
                                            const Architecture& arch, double m_bps) {
    if (m_bps < 0.0)
        throw std::invalid_argument("critical_radius_transmission: m must be >= 0");
    p.validate();
    arch.validate();
    const double eta = arch.transmit_coeff();
    if (m_bps == 0.0) return {critical_radius_power(p, arch), true};
    if (eta <= 0.0) return {0.0, false};

    const double h0 = p.h0();
    const double x = m_bps / (eta * p.bandwidth_hz);
    const double lt = log_pow2m1(x);  // log(2^x - 1)

    // infeasible when h0 <= eta xi (2^x - 1)
    if (arch.xi == 1 && std::log(eta) + lt >= std::log(h0)) return {0.0, false};

    const double log_num = std::log(arch.harvest_coeff() * p.rf_dc_eff * p.tx_power_w *
                                    p.tx_gain * p.rx_gain) +
                           std::log(h0 - (arch.xi == 1 ? eta * std::exp(lt) : 0.0));
    const double log_den = logaddexp(std::log(p.circuit_power_w * h0),
                                     std::log(eta * p.noise_w) + lt);
    const double g = p.wavelength_m / (4.0 * kPi) * std::exp(0.5 * (log_num - log_den));
    return {g, true};
}

BoundResult transmission_outage_bound(const PhysicalParams& p, const Architecture& arch,
                                      const SpatialModel& model, double m_bps) {
    const CriticalRadius g = critical_radius_transmission(p, arch, m_bps);
    if (!g.feasible) {
        BoundResult b;
        b.value = 1.0;
        b.feasible = false;
        return b;
    }
    BoundResult b = hole_probability_detailed(g.value, model);
    b.critical_radius = g.value;
    b.eps_warning = !(p.min_dist_m < g.value / 10.0);
    return b;
}

double optimal_tau(const PhysicalParams& p, int xi, double m_bps) {
    p.validate();
    if (xi != 0 && xi != 1) throw std::invalid_argument("optimal_tau: xi must be 0 or 1");
    if (!(m_bps > 0.0)) throw std::invalid_argument("optimal_tau: m must be > 0");

    const double h0 = p.h0();
    const double W = p.bandwidth_hz;
    const double s2 = p.noise_w;
    const double pch = p.circuit_power_w * h0;

    // log of the square of the objective; -inf when infeasible
    auto logobj2 = [&](double tau) {
        const double u = 1.0 - tau;
        if (!(tau > 0.0) || !(u > 0.0)) return -std::numeric_limits<double>::infinity();
        const double lt = log_pow2m1(m_bps / (u * W));
        double num = h0;
        if (xi == 1) {
            const double l = std::log(u) + lt;
            if (l >= std::log(h0)) return -std::numeric_limits<double>::infinity();
            num = h0 - std::exp(l);
        }
        const double logden = logaddexp(std::log(pch), std::log(u * s2) + lt);
        return std::log(tau) + std::log(num) - logden;
    };

    // coarse grid, then golden refinement around the best cell
    const double step = 0.005;
    double best_tau = -1.0;
    double best = -std::numeric_limits<double>::infinity();
    for (double tau = step; tau < 1.0 - 0.5 * step; tau += step) {
        const double v = logobj2(tau);
        if (v > best) {
            best = v;
            best_tau = tau;
        }
    }
    if (best_tau < 0.0)
        throw std::runtime_error("optimal_tau: rate requirement infeasible for all tau");
    const double lo = std::max(best_tau - step, 1e-9);
    const double hi = std::min(best_tau + step, 1.0 - 1e-9);
    return golden_max(logobj2, lo, hi, 1e-6).x;
}

RateBound rate_lower_bound(const PhysicalParams& p, const Architecture& arch,
                           const SpatialModel& model) {
    p.validate();
    arch.validate();
    model.validate();
    const double eta = arch.transmit_coeff();
    if (eta <= 0.0) return {0.0, 0.0};

    auto objective = [&](double m) {
        const BoundResult b = transmission_outage_bound(p, arch, model, m);
        return m * (1.0 - b.value);
    };

    // log grid over the dimensionless rate x = m / (eta W), then refine
    const double x_lo = 1e-6, x_hi = 80.0;
    const int npts = 400;
    double best_m = 0.0, best = 0.0;
    std::vector<double> ms(npts);
    for (int i = 0; i < npts; ++i) {
        const double x = x_lo * std::pow(x_hi / x_lo, i / (npts - 1.0));
        ms[i] = x * eta * p.bandwidth_hz;
        const double v = objective(ms[i]);
        if (v > best) {
            best = v;
            best_m = ms[i];
        }
    }
    if (best <= 0.0) return {0.0, 0.0};
    const auto it = std::lower_bound(ms.begin(), ms.end(), best_m);
    const std::size_t idx = static_cast<std::size_t>(it - ms.begin());
    const double lo = idx > 0 ? ms[idx - 1] : ms.front();
    const double hi = idx + 1 < ms.size() ? ms[idx + 1] : ms.back();
    const GoldenResult g = golden_max(objective, lo, hi, 1e-9 * hi + 1e-12);
    if (g.f >= best) return {g.f, g.x};
    return {best, best_m};
}

}  // namespace rfh
