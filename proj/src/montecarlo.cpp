#include "rfh/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "rfh/rng.hpp"

namespace rfh {

namespace {

// Runs fn(i) for i in [0,n) across `workers` threads in contiguous blocks.
// fn must only write to slot i of preallocated storage.
template <typename Fn>
void parallel_for(std::size_t n, int workers, Fn&& fn) {
    const int nw = std::max(1, workers);
    if (nw == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t block = (n + nw - 1) / nw;
    for (int w = 0; w < nw; ++w) {
        const std::size_t lo = w * block;
        const std::size_t hi = std::min(n, lo + block);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

double kahan_mean(const std::vector<double>& v) {
    double s = 0.0, c = 0.0;
    for (double x : v) {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s / static_cast<double>(v.size());
}

}  // namespace

HarvestMoments estimate_harvest_moments(const PhysicalParams& p, const Architecture& arch,
                                        const SpatialModel& model, std::size_t n,
                                        std::uint64_t master_seed, const McOptions& opts) {
    if (n < 2) throw std::invalid_argument("estimate_harvest_moments: n must be >= 2");
    p.validate();
    arch.validate();

    const DiscSampler sampler(model, opts.method);
    std::vector<double> values(n);
    parallel_for(n, opts.workers, [&](std::size_t i) {
        Rng rng = replication_stream(master_seed, i);
        const PointConfiguration cfg = sampler.sample(rng);
        values[i] = aggregate_harvest(cfg, p, arch);
    });

    const double mean = kahan_mean(values);
    double m2 = 0.0, m4 = 0.0, c2 = 0.0, c4 = 0.0;
    for (double x : values) {
        const double d = x - mean;
        const double d2 = d * d;
        double y = d2 - c2, t = m2 + y;
        c2 = (t - m2) - y;
        m2 = t;
        y = d2 * d2 - c4;
        t = m4 + y;
        c4 = (t - m4) - y;
        m4 = t;
    }
    const double nn = static_cast<double>(n);
    const double var = m2 / (nn - 1.0);
    m4 /= nn;

    HarvestMoments out;
    out.mean = {mean, std::sqrt(var / nn), n, master_seed, Scenario::general};
    const double var_of_var = std::max(0.0, (m4 - var * var * (nn - 3.0) / (nn - 1.0)) / nn);
    out.variance = {var, std::sqrt(var_of_var), n, master_seed, Scenario::general};
    return out;
}

MetricEstimate estimate_outage(OutageKind kind, Scenario scenario, const PhysicalParams& p,
                               const Architecture& arch, const SpatialModel& model,
                               double m_bps, std::size_t n, std::uint64_t master_seed,
                               const McOptions& opts) {
    if (n < 2) throw std::invalid_argument("estimate_outage: n must be >= 2");
    p.validate();
    arch.validate();

    double crit = 0.0;
    if (kind == OutageKind::power) {
        crit = critical_radius_power(p, arch);
    } else {
        const CriticalRadius g = critical_radius_transmission(p, arch, m_bps);
        if (!g.feasible) return {1.0, 0.0, n, master_seed, scenario};
        crit = g.value;
    }
    const double worst_radius = std::max(crit - p.min_dist_m, 0.0);

    const DiscSampler sampler(model, opts.method);
    std::vector<double> ind(n);
    parallel_for(n, opts.workers, [&](std::size_t i) {
        Rng rng = replication_stream(master_seed, i);
        const PointConfiguration cfg = sampler.sample(rng);
        bool outage;
        if (scenario == Scenario::worst_case) {
            outage = cfg.min_norm() >= worst_radius;
        } else if (kind == OutageKind::power) {
            outage = aggregate_harvest(cfg, p, arch) < p.circuit_power_w;
        } else {
            outage = max_rate(aggregate_harvest(cfg, p, arch), p, arch) < m_bps;
        }
        ind[i] = outage ? 1.0 : 0.0;
    });

    const double freq = kahan_mean(ind);
    const double se = std::sqrt(std::max(freq * (1.0 - freq), 0.0) / static_cast<double>(n));
    return {freq, se, n, master_seed, scenario};
}

TauSearchResult estimate_optimal_tau_empirical(const PhysicalParams& p,
                                               const SpatialModel& model, int xi,
                                               double m_bps,
                                               const std::vector<double>& tau_grid,
                                               std::size_t n, std::uint64_t master_seed,
                                               const McOptions& opts) {
    if (tau_grid.empty())
        throw std::invalid_argument("estimate_optimal_tau_empirical: empty tau grid");
    for (std::size_t i = 0; i < tau_grid.size(); ++i) {
        if (!(tau_grid[i] > 0.0 && tau_grid[i] < 1.0))
            throw std::invalid_argument("estimate_optimal_tau_empirical: grid must lie in (0,1)");
        if (i > 0 && tau_grid[i] - tau_grid[i - 1] > 0.02 + 1e-12)
            throw std::invalid_argument("estimate_optimal_tau_empirical: grid step must be <= 0.02");
    }
    p.validate();

    // common random numbers: one draw set, nearest-source distance per draw
    const DiscSampler sampler(model, opts.method);
    std::vector<double> min_norm(n);
    parallel_for(n, opts.workers, [&](std::size_t i) {
        Rng rng = replication_stream(master_seed, i);
        min_norm[i] = sampler.sample(rng).min_norm();
    });

    TauSearchResult res;
    res.taus = tau_grid;
    res.outage_freq.resize(tau_grid.size());
    double best = 2.0;
    bool any_feasible = false;
    for (std::size_t t = 0; t < tau_grid.size(); ++t) {
        const Architecture arch = Architecture::time_switching(tau_grid[t], xi);
        const CriticalRadius g = critical_radius_transmission(p, arch, m_bps);
        double freq = 1.0;
        if (g.feasible) {
            any_feasible = true;
            const double radius = std::max(g.value - p.min_dist_m, 0.0);
            std::size_t cnt = 0;
            for (double mn : min_norm)
                if (mn >= radius) ++cnt;
            freq = static_cast<double>(cnt) / static_cast<double>(n);
        }
        res.outage_freq[t] = freq;
        if (freq < best) {
            best = freq;
            res.tau_hat = tau_grid[t];
        }
    }
    if (!any_feasible || best >= 1.0)
        throw std::runtime_error("estimate_optimal_tau_empirical: infeasible for the whole grid");
    return res;
}

}  // namespace rfh
