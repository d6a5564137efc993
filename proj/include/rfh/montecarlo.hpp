#pragma once

#include <cstdint>
#include <vector>

#include "rfh/analytic.hpp"
#include "rfh/model.hpp"
#include "rfh/pointprocess.hpp"

namespace rfh {

enum class Scenario { general, worst_case };
enum class OutageKind { power, transmission };

struct MetricEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t n = 0;
    std::uint64_t master_seed = 0;
    Scenario scenario = Scenario::general;
};

struct McOptions {
    SamplerMethod method = SamplerMethod::gram_schmidt;
    int workers = 1;  // affects wall time only, never results
};

struct HarvestMoments {
    MetricEstimate mean;      // W
    MetricEstimate variance;  // W^2, std_error from the fourth-moment formula
};

// Replication i of a run draws its configuration from
// replication_stream(master_seed, i); results are reduced in replication
// order with compensated summation, so any worker partition reproduces the
// same numbers bit for bit.
HarvestMoments estimate_harvest_moments(const PhysicalParams& p, const Architecture& arch,
                                        const SpatialModel& model, std::size_t n,
                                        std::uint64_t master_seed,
                                        const McOptions& opts = {});

// General scenario evaluates the outage definition itself (P_H < P_C, or
// C < m); the worst-case scenario tests whether the nearest source lies
// beyond the critical radius minus epsilon.
MetricEstimate estimate_outage(OutageKind kind, Scenario scenario, const PhysicalParams& p,
                               const Architecture& arch, const SpatialModel& model,
                               double m_bps, std::size_t n, std::uint64_t master_seed,
                               const McOptions& opts = {});

struct TauSearchResult {
    double tau_hat = 0.0;
    std::vector<double> taus;
    std::vector<double> outage_freq;
};

// Worst-case transmission outage frequency per tau on common random numbers
// (one set of n draws shared across the whole grid); returns the grid argmin.
TauSearchResult estimate_optimal_tau_empirical(const PhysicalParams& p,
                                               const SpatialModel& model, int xi,
                                               double m_bps,
                                               const std::vector<double>& tau_grid,
                                               std::size_t n, std::uint64_t master_seed,
                                               const McOptions& opts = {});

}  // namespace rfh
