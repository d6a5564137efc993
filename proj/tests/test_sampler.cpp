#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "rfh/analytic.hpp"
#include "rfh/pointprocess.hpp"
#include "rfh/quadrature.hpp"

using namespace rfh;

namespace {

struct CountStats {
    double mean, var, var_se;
};

CountStats count_stats(const DiscSampler& s, int n, std::uint64_t seed, double within = -1.0) {
    std::vector<double> c(n);
    for (int i = 0; i < n; ++i) {
        Rng rng = replication_stream(seed, i);
        const auto cfg = s.sample(rng);
        c[i] = within < 0.0 ? double(cfg.count()) : double(cfg.count_within(within));
    }
    double m = 0.0;
    for (double v : c) m += v;
    m /= n;
    double m2 = 0.0, m4 = 0.0;
    for (double v : c) {
        const double d = v - m;
        m2 += d * d;
        m4 += d * d * d * d;
    }
    const double var = m2 / (n - 1.0);
    m4 /= n;
    const double vvar = std::max(0.0, (m4 - var * var * (n - 3.0) / (n - 1.0)) / n);
    return {m, var, std::sqrt(vvar)};
}

double hole_freq(const DiscSampler& s, double r, int n, std::uint64_t seed) {
    int empty = 0;
    for (int i = 0; i < n; ++i) {
        Rng rng = replication_stream(seed, i);
        if (s.sample(rng).min_norm() >= r) ++empty;
    }
    return double(empty) / n;
}

}  // namespace

TEST_CASE("determinism: identical seed gives identical configuration") {
    for (SamplerMethod m : {SamplerMethod::gram_schmidt, SamplerMethod::radial}) {
        const DiscSampler s(SpatialModel::ginibre(2, 0.1, 5.0), m);
        const auto a = s.sample(12345u);
        const auto b = s.sample(12345u);
        REQUIRE(a.count() == b.count());
        for (std::size_t i = 0; i < a.count(); ++i) {
            CHECK(a.points[i].x == b.points[i].x);
            CHECK(a.points[i].y == b.points[i].y);
        }
        const auto c = s.sample(12346u);
        CHECK((c.count() != a.count() || c.min_norm() != a.min_norm()));
    }
    const auto p1 = sample_ppp(0.3, 5.0, 99u);
    const auto p2 = sample_ppp(0.3, 5.0, 99u);
    REQUIRE(p1.count() == p2.count());
    for (std::size_t i = 0; i < p1.count(); ++i) CHECK(p1.points[i].x == p2.points[i].x);
}

TEST_CASE("every point lies inside the closed disc") {
    for (SamplerMethod m : {SamplerMethod::gram_schmidt, SamplerMethod::radial}) {
        const DiscSampler s(SpatialModel::ginibre(1, 0.2, 4.0), m);
        for (int i = 0; i < 200; ++i) {
            const auto cfg = s.sample(1000u + i);
            for (const auto& p : cfg.points) CHECK(p.norm() <= 4.0 + 1e-12);
        }
    }
    for (int i = 0; i < 200; ++i) {
        const auto cfg = sample_ppp(0.5, 3.0, 2000u + i);
        for (const auto& p : cfg.points) CHECK(p.norm() <= 3.0);
    }
}

TEST_CASE("mode selection is shared between schemes: per-seed counts coincide") {
    const DiscSampler gs(SpatialModel::ginibre(1, 0.1, 5.0), SamplerMethod::gram_schmidt);
    const DiscSampler rad(SpatialModel::ginibre(1, 0.1, 5.0), SamplerMethod::radial);
    for (int i = 0; i < 100; ++i)
        CHECK(gs.sample(500u + i).count() == rad.sample(500u + i).count());
}

TEST_CASE("alpha DPP with j=1 is the plain Ginibre DPP") {
    const auto a = sample_ginibre_dpp(0.1, 5.0, 321u);
    const auto b = sample_alpha_dpp(1, 0.1, 5.0, 321u);
    REQUIRE(a.count() == b.count());
    for (std::size_t i = 0; i < a.count(); ++i) CHECK(a.points[i].x == b.points[i].x);
}

TEST_CASE("intensity: mean count matches rho pi R^2") {
    const SpatialModel mod = SpatialModel::ginibre(1, 0.05, 10.0);
    const DiscSampler s(mod, SamplerMethod::gram_schmidt);
    const auto st = count_stats(s, 20000, 42u);
    // count variance for j=1 is sum lambda(1-lambda) ~ 2.25 here
    const double se = std::sqrt(st.var / 20000.0);
    CHECK(std::fabs(st.mean - mod.mean_count()) <= 4.0 * se);
}

TEST_CASE("PPP count mean and variance are both rho pi R^2") {
    const SpatialModel mod = SpatialModel::ppp(0.3, 10.0);
    const DiscSampler s(mod);
    const auto st = count_stats(s, 20000, 7u);
    const double lam = mod.mean_count();
    CHECK(std::fabs(st.mean - lam) <= 4.0 * std::sqrt(lam / 20000.0));
    CHECK(std::fabs(st.var - lam) <= 4.0 * st.var_se);
}

TEST_CASE("hole frequencies match the Fredholm product") {
    struct Case {
        int j;
        double rho, R, r;
    };
    const Case cases[] = {{1, 0.1, 5.0, 1.0}, {1, 0.1, 5.0, 2.0}, {2, 0.1, 5.0, 2.0}};
    const int n = 30000;
    for (const auto& c : cases) {
        const SpatialModel mod = SpatialModel::ginibre(c.j, c.rho, c.R);
        const double expect = hole_probability(c.r, mod);
        for (SamplerMethod m : {SamplerMethod::gram_schmidt, SamplerMethod::radial}) {
            const DiscSampler s(mod, m);
            const double freq = hole_freq(s, c.r, n, 4242u);
            const double se = std::sqrt(expect * (1.0 - expect) / n);
            INFO("j=", c.j, " r=", c.r, " method=", int(m), " freq=", freq, " expect=", expect);
            CHECK(std::fabs(freq - expect) <= 3.5 * se);
        }
    }
    // PPP closed form e^{-pi rho r^2}
    const SpatialModel ppp = SpatialModel::ppp(0.1, 5.0);
    const DiscSampler s(ppp);
    const double expect = std::exp(-std::numbers::pi * 0.1 * 4.0);
    const double freq = hole_freq(s, 2.0, n, 17u);
    CHECK(std::fabs(freq - expect) <= 3.5 * std::sqrt(expect * (1.0 - expect) / n));
}

TEST_CASE("pair correlation of the Gram-Schmidt sampler: 1 - e^{-pi rho t^2}") {
    const double rho = 0.1, R = 5.0;
    const DiscSampler s(SpatialModel::ginibre(1, rho, R), SamplerMethod::gram_schmidt);
    const int n = 20000;
    const int nbins = 14;
    const double t0 = 0.25, dt = 0.25;

    std::vector<double> sum(nbins, 0.0), sum2(nbins, 0.0);
    std::vector<int> bin(nbins);
    for (int i = 0; i < n; ++i) {
        Rng rng = replication_stream(31337u, i);
        const auto cfg = s.sample(rng);
        std::fill(bin.begin(), bin.end(), 0);
        for (std::size_t a = 0; a < cfg.count(); ++a) {
            for (std::size_t b = a + 1; b < cfg.count(); ++b) {
                const double d = std::hypot(cfg.points[a].x - cfg.points[b].x,
                                            cfg.points[a].y - cfg.points[b].y);
                const int k = int((d - t0) / dt);
                if (d >= t0 && k < nbins) bin[k] += 2;  // ordered pairs
            }
        }
        for (int k = 0; k < nbins; ++k) {
            sum[k] += bin[k];
            sum2[k] += double(bin[k]) * bin[k];
        }
    }

    for (int k = 0; k < nbins; ++k) {
        const double lo = t0 + k * dt, hi = lo + dt;
        // E[ordered pairs with |x-y| in bin] = int 2 pi t |W cap W_t| rho^2 g(t) dt
        const double expect = oracle::simpson(
            [&](double t) {
                const double g = 1.0 - std::exp(-std::numbers::pi * rho * t * t);
                return 2.0 * std::numbers::pi * t * oracle::disc_set_covariance(t, R) * rho * rho * g;
            },
            lo, hi, 64);
        const double mean = sum[k] / n;
        const double var = sum2[k] / n - mean * mean;
        const double se = std::sqrt(var / n);
        INFO("bin ", lo, "-", hi, " mean=", mean, " expect=", expect);
        CHECK(std::fabs(mean - expect) <= 3.5 * se + 1e-12);
    }
}

TEST_CASE("repulsion ordering: count variance grows from j=1 to j=4 to PPP") {
    // rho = 0.3, R = 10, counts taken in B(0, R/2)
    const double rho = 0.3, R = 10.0, rb = 5.0;
    const int n = 10000;

    const DiscSampler s1(SpatialModel::ginibre(1, rho, R), SamplerMethod::gram_schmidt);
    const DiscSampler s4(SpatialModel::ginibre(4, rho, R), SamplerMethod::gram_schmidt);
    const DiscSampler sp(SpatialModel::ppp(rho, R));

    const auto v1 = count_stats(s1, n, 1001u, rb);
    const auto v4 = count_stats(s4, n, 1002u, rb);
    const auto vp = count_stats(sp, n, 1003u, rb);

    CHECK(v1.var + 3.0 * (v1.var_se + v4.var_se) < v4.var);
    CHECK(v4.var + 3.0 * (v4.var_se + vp.var_se) < vp.var);

    // analytic variance: rho |B| + alpha iint_{B^2} |K|^2 = rho pi rb^2 - rho^2 I / j
    const auto I = planar_gaussian_pair_integral(rho, rb, [](double) { return 1.0; },
                                                 rb / 8.0, 1e-6);
    REQUIRE(I.converged);
    const double base = rho * std::numbers::pi * rb * rb;
    CHECK(std::fabs(v1.var - (base - rho * rho * I.value)) <= 4.0 * v1.var_se);
    CHECK(std::fabs(v4.var - (base - rho * rho * I.value / 4.0)) <= 4.0 * v4.var_se);
    CHECK(std::fabs(vp.var - base) <= 4.0 * vp.var_se);
}

TEST_CASE("degenerate window mass short-circuits to a 0/1-point draw") {
    const SpatialModel tiny = SpatialModel::ginibre(1, 1e-9, 1.0);
    const DiscSampler s(tiny);
    for (int i = 0; i < 1000; ++i) {
        const auto cfg = s.sample(90000u + i);
        CHECK(cfg.count() <= 1);
        if (cfg.count() == 1) CHECK(cfg.points[0].norm() <= 1.0);
    }
}

TEST_CASE("gram_schmidt scheme refuses windows whose phi_0 underflows") {
    CHECK_THROWS_AS(DiscSampler(SpatialModel::ginibre(1, 5.0, 10.0), SamplerMethod::gram_schmidt),
                    std::invalid_argument);
    CHECK_NOTHROW(DiscSampler(SpatialModel::ginibre(1, 5.0, 10.0), SamplerMethod::radial));
}

TEST_CASE("empty and singleton configuration helpers") {
    PointConfiguration cfg;
    CHECK(cfg.count() == 0);
    CHECK(std::isinf(cfg.min_norm()));
    cfg.points.push_back({3.0, 4.0});
    CHECK(cfg.min_norm() == doctest::Approx(5.0));
    CHECK(cfg.count_within(5.0) == 1);
    CHECK(cfg.count_within(4.9) == 0);
}
