#pragma once

#include "rfh/model.hpp"
#include "rfh/pointprocess.hpp"

namespace rfh {

// Result of a Fredholm-product bound evaluation. `truncation_residual` bounds
// the effect of the neglected eigenvalue tail on the log-product; values are
// only reported when it is below 1e-9.
struct BoundResult {
    double value = 1.0;              // probability in [0,1]
    int truncation_N = 0;            // eigenvalues retained
    double truncation_residual = 0.0;
    double critical_radius = 0.0;    // gamma or gamma_m actually used (m)
    bool feasible = true;            // false: rate unattainable, bound is exactly 1
    bool eps_warning = false;        // epsilon not << critical radius
};

struct MomentResult {
    double mean = 0.0;                       // W
    double variance = 0.0;                   // W^2
    double approx_mean = 0.0;                // small-epsilon closed form, W
    double quadrature_error_estimate = 0.0;  // W^2
};

struct CriticalRadius {
    double value = 0.0;  // m
    bool feasible = true;
};

struct RateBound {
    double value = 0.0;   // bits/s
    double best_m = 0.0;  // maximizing rate threshold, bits/s
};

// Friis harvest rate from a single source at the given distance from the
// sensor: rho_c * beta * P_S * G_S * G_H * lambda^2 / (4 pi (eps + d))^2.
double harvest_rate_point(double distance_norm, const PhysicalParams& p,
                          const Architecture& arch);

// Sum of per-source harvest rates over one sampled configuration.
double aggregate_harvest(const PointConfiguration& cfg, const PhysicalParams& p,
                         const Architecture& arch);

// Shannon-limit transmission rate for aggregate harvested power P_H:
// eta W log2(1 + h0 [P_H - P_C]^+ / (eta (xi P_H + sigma^2))), 0 when eta=0.
double max_rate(double aggregate_harvest_w, const PhysicalParams& p,
                const Architecture& arch);

// Expectation of the aggregate harvest rate (exact and small-epsilon
// approximation). Identical for the DPP and the PPP at equal density.
MomentResult expected_harvest(const PhysicalParams& p, const Architecture& arch,
                              const SpatialModel& model);

// Variance of the aggregate harvest rate; the repulsion correction term is
// evaluated by the Bessel-reduced quadrature. Throws if the quadrature does
// not reach its error target.
MomentResult variance_harvest(const PhysicalParams& p, const Architecture& arch,
                              const SpatialModel& model);

// P(no source within distance r of the sensor). Fredholm eigenvalue product
// for the Ginibre model, exp(-pi rho min(R,r)^2) for the PPP.
double hole_probability(double r, const SpatialModel& model);
BoundResult hole_probability_detailed(double r, const SpatialModel& model);

// Critical radius within which a single source can power the circuit:
// gamma = (lambda / 4 pi) sqrt(rho_c beta P_S G_S G_H / P_C).
double critical_radius_power(const PhysicalParams& p, const Architecture& arch);

// Worst-case upper bound on P(P_H < P_C).
BoundResult power_outage_bound(const PhysicalParams& p, const Architecture& arch,
                               const SpatialModel& model);

// Critical radius for sustaining rate m (bits/s); infeasible when the
// required rate exceeds the interference-limited ceiling.
CriticalRadius critical_radius_transmission(const PhysicalParams& p,
                                            const Architecture& arch, double m_bps);

// Worst-case upper bound on P(C < m); exactly 1 when infeasible.
BoundResult transmission_outage_bound(const PhysicalParams& p, const Architecture& arch,
                                      const SpatialModel& model, double m_bps);

// Time-switching coefficient minimizing the transmission outage bound.
// Depends only on h0, xi, m, W, P_C and sigma^2; independent of the spatial
// model. Throws when no tau is feasible.
double optimal_tau(const PhysicalParams& p, int xi, double m_bps);

// Lower bound on the expected transmission rate:
// sup_M M (1 - transmission_outage_bound(M)).
RateBound rate_lower_bound(const PhysicalParams& p, const Architecture& arch,
                           const SpatialModel& model);

}  // namespace rfh
