#include "rfh/pointprocess.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "rfh/special.hpp"

namespace rfh {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kDegenerateMass = 1e-6;   // rho*pi*R^2 below this: single-mode shortcut
constexpr int kEnvelopeGrid = 256;
constexpr double kEnvelopeSafety = 1.2;
constexpr long kMaxAttemptsPerPoint = 2000000;
}  // namespace

double Point::norm() const { return std::hypot(x, y); }

double PointConfiguration::min_norm() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& p : points) m = std::min(m, p.norm());
    return m;
}

std::size_t PointConfiguration::count_within(double r) const {
    std::size_t c = 0;
    for (const auto& p : points)
        if (p.norm() <= r) ++c;
    return c;
}

DiscSampler::DiscSampler(const SpatialModel& model, SamplerMethod method)
    : model_(model), method_(method) {
    model_.validate();
    if (model_.is_ppp()) return;

    const double a = kPi * model_.density * model_.radius * model_.radius;
    if (a < kDegenerateMass) return;  // degenerate shortcut needs no spectrum

    if (method_ == SamplerMethod::gram_schmidt && a > 1200.0)
        throw std::invalid_argument(
            "DiscSampler: rho*pi*R^2 too large for the gram_schmidt scheme "
            "(phi_0 underflows); use SamplerMethod::radial");

    spectrum_ = GinibreSpectrum::build(model_.density, model_.radius);
    // phi_0(z) = sqrt(rho/lambda_0) exp(-pi rho |z|^2 / 2)
    // phi_{n+1}(z) = phi_n(z) * z * sqrt(pi rho) * sqrt(lambda_n / (lambda_{n+1} (n+1)))
    const auto& lam = spectrum_.eigenvalues;
    phi_step_.resize(lam.size() > 0 ? lam.size() - 1 : 0);
    for (std::size_t n = 0; n + 1 < lam.size(); ++n)
        phi_step_[n] = std::sqrt(lam[n] / (lam[n + 1] * (n + 1.0))) * std::sqrt(kPi * model_.density);
    phi0_log_ = lam.empty() ? 0.0 : 0.5 * std::log(model_.density / lam[0]);
}

PointConfiguration DiscSampler::sample(std::uint64_t seed) const {
    Rng rng = replication_stream(seed, 0);
    PointConfiguration cfg = sample(rng);
    cfg.seed = seed;
    return cfg;
}

PointConfiguration DiscSampler::sample(Rng& rng) const {
    PointConfiguration cfg;
    cfg.model_tag = model_.tag();
    const double rho = model_.density;
    const double R = model_.radius;

    if (model_.is_ppp()) {
        const long n = rng.poisson(model_.mean_count());
        cfg.points.reserve(n);
        for (long i = 0; i < n; ++i) {
            const double r = R * std::sqrt(rng.uniform());
            const double th = 2.0 * kPi * rng.uniform();
            cfg.points.push_back({r * std::cos(th), r * std::sin(th)});
        }
        return cfg;
    }

    const double a = kPi * rho * R * R;
    if (a < kDegenerateMass) {
        // Only mode 0 carries non-negligible mass (lambda_1 ~ a^2/2).
        const double lam0 = -std::expm1(-a);
        for (int rep = 0; rep < model_.j; ++rep) {
            if (rng.uniform() < lam0 / model_.j) {
                const double t = -std::log1p(-rng.uniform() * lam0);
                const double r = std::min(std::sqrt(t / (kPi * rho)), R);
                const double th = 2.0 * kPi * rng.uniform();
                cfg.points.push_back({r * std::cos(th), r * std::sin(th)});
            }
        }
        return cfg;
    }

    // alpha = -1/j superposition: j independent determinantal draws with
    // kernel K/j, i.e. Bernoulli(lambda_n / j) mode selection each.
    const auto& lam = spectrum_.eigenvalues;
    std::vector<int> active;
    for (int rep = 0; rep < model_.j; ++rep) {
        active.clear();
        for (std::size_t n = 0; n < lam.size(); ++n)
            if (rng.uniform() < lam[n] / model_.j) active.push_back(static_cast<int>(n));
        if (active.empty()) continue;
        if (method_ == SamplerMethod::gram_schmidt)
            sample_projection_gs(active, rng, cfg.points);
        else
            sample_projection_radial(active, rng, cfg.points);
    }
    return cfg;
}

// Exact conditional sampling of the projection DPP spanned by the active
// eigenfunctions (HKPV): point i is drawn from the kernel diagonal minus its
// projection on the span of the already-sampled directions, and the basis is
// extended by Gram-Schmidt after every acceptance.
void DiscSampler::sample_projection_gs(const std::vector<int>& active, Rng& rng,
                                       std::vector<Point>& out) const {
    const double rho = model_.density;
    const double R = model_.radius;
    const int k = static_cast<int>(active.size());
    const int nmax = active.back() + 1;

    // v(z) = (phi_n(z))_{n in active}, planar storage
    std::vector<double> vr(k), vi(k);
    auto eval_v = [&](double x, double y) {
        const double r2 = x * x + y * y;
        double cr = std::exp(phi0_log_ - 0.5 * kPi * rho * r2);
        double ci = 0.0;
        int slot = 0;
        for (int n = 0; n < nmax; ++n) {
            if (active[slot] == n) {
                vr[slot] = cr;
                vi[slot] = ci;
                if (++slot == k) break;
            }
            const double sx = phi_step_[n] * x, sy = phi_step_[n] * y;
            const double nr = cr * sx - ci * sy;
            ci = cr * sy + ci * sx;
            cr = nr;
        }
    };

    // Dominating envelope: the conditional density at every step is bounded
    // by ||v(z)||^2 / (k - i), and ||v||^2 is radial; take its grid sup once.
    double smax = 0.0;
    {
        for (int g = 0; g < kEnvelopeGrid; ++g) {
            const double r = R * std::sqrt((g + 0.5) / kEnvelopeGrid);
            double m = std::exp(phi0_log_ - 0.5 * kPi * rho * r * r);
            double s = 0.0;
            int slot = 0;
            for (int n = 0; n < nmax; ++n) {
                if (active[slot] == n) {
                    s += m * m;
                    if (++slot == k) break;
                }
                m *= phi_step_[n] * r;
            }
            smax = std::max(smax, s);
        }
        smax *= kEnvelopeSafety;
    }

    std::vector<double> er, ei;  // orthonormal basis, row-major k entries per row
    er.reserve(static_cast<std::size_t>(k) * k);
    ei.reserve(static_cast<std::size_t>(k) * k);
    std::vector<double> cr(k), ci(k);

    for (int step = 0; step < k; ++step) {
        const int nbasis = step;
        double menv = smax / (k - step);
        long attempts = 0;
        for (;;) {
            if (++attempts > kMaxAttemptsPerPoint)
                throw std::runtime_error(
                    "DiscSampler: rejection sampler exceeded attempt budget "
                    "(envelope bug)");
            const double rr = R * std::sqrt(rng.uniform());
            const double th = 2.0 * kPi * rng.uniform();
            const double px = rr * std::cos(th), py = rr * std::sin(th);
            eval_v(px, py);

            double q = 0.0;
            for (int i = 0; i < k; ++i) q += vr[i] * vr[i] + vi[i] * vi[i];
            for (int b = 0; b < nbasis; ++b) {
                const double* br = &er[static_cast<std::size_t>(b) * k];
                const double* bi = &ei[static_cast<std::size_t>(b) * k];
                double dr = 0.0, di = 0.0;
                for (int i = 0; i < k; ++i) {
                    dr += br[i] * vr[i] + bi[i] * vi[i];
                    di += br[i] * vi[i] - bi[i] * vr[i];
                }
                cr[b] = dr;
                ci[b] = di;
                q -= dr * dr + di * di;
            }
            const double p = std::max(q, 0.0) / (k - step);
            if (p > menv) {
                // radial-sup estimate was undershot; widen and restart fresh
                smax = kEnvelopeSafety * p * (k - step);
                menv = smax / (k - step);
                continue;
            }
            if (rng.uniform() * menv <= p) {
                out.push_back({px, py});
                break;
            }
        }

        // Gram-Schmidt: subtract projections computed in the accept pass,
        // then one re-orthogonalization sweep for numerical hygiene.
        for (int b = 0; b < nbasis; ++b) {
            const double* br = &er[static_cast<std::size_t>(b) * k];
            const double* bi = &ei[static_cast<std::size_t>(b) * k];
            for (int i = 0; i < k; ++i) {
                vr[i] -= cr[b] * br[i] - ci[b] * bi[i];
                vi[i] -= cr[b] * bi[i] + ci[b] * br[i];
            }
        }
        for (int b = 0; b < nbasis; ++b) {
            const double* br = &er[static_cast<std::size_t>(b) * k];
            const double* bi = &ei[static_cast<std::size_t>(b) * k];
            double dr = 0.0, di = 0.0;
            for (int i = 0; i < k; ++i) {
                dr += br[i] * vr[i] + bi[i] * vi[i];
                di += br[i] * vi[i] - bi[i] * vr[i];
            }
            for (int i = 0; i < k; ++i) {
                vr[i] -= dr * br[i] - di * bi[i];
                vi[i] -= dr * bi[i] + di * br[i];
            }
        }
        double norm2 = 0.0;
        for (int i = 0; i < k; ++i) norm2 += vr[i] * vr[i] + vi[i] * vi[i];
        if (!(norm2 > 0.0))
            throw std::runtime_error("DiscSampler: Gram-Schmidt breakdown");
        const double inv = 1.0 / std::sqrt(norm2);
        for (int i = 0; i < k; ++i) {
            er.push_back(vr[i] * inv);
            ei.push_back(vi[i] * inv);
        }
    }
}

// Radii scheme: for active mode n the radius satisfies pi rho r^2 ~
// Gamma(n+1) conditioned to [0, pi rho R^2]; angles are uniform.
void DiscSampler::sample_projection_radial(const std::vector<int>& active, Rng& rng,
                                           std::vector<Point>& out) const {
    const double rho = model_.density;
    const double R = model_.radius;
    const double a = kPi * rho * R * R;
    const auto& lam = spectrum_.eigenvalues;

    for (int n : active) {
        const double lam_n = lam[n];
        double t = -1.0;
        if (lam_n >= 0.3) {
            for (int tries = 0; tries < 200; ++tries) {
                const double g = rng.gamma(n + 1.0);
                if (g <= a) {
                    t = g;
                    break;
                }
            }
        }
        if (t < 0.0) t = reg_gamma_lower_inv(n + 1.0, rng.uniform() * lam_n);
        const double r = std::min(std::sqrt(t / (kPi * rho)), R);
        const double th = 2.0 * kPi * rng.uniform();
        out.push_back({r * std::cos(th), r * std::sin(th)});
    }
}

PointConfiguration sample_ginibre_dpp(double rho, double R, std::uint64_t seed,
                                      SamplerMethod method) {
    return DiscSampler(SpatialModel::ginibre(1, rho, R), method).sample(seed);
}

PointConfiguration sample_alpha_dpp(int j, double rho, double R, std::uint64_t seed,
                                    SamplerMethod method) {
    return DiscSampler(SpatialModel::ginibre(j, rho, R), method).sample(seed);
}

PointConfiguration sample_ppp(double rho, double R, std::uint64_t seed) {
    return DiscSampler(SpatialModel::ppp(rho, R)).sample(seed);
}

PointConfiguration sample_point_process(const SpatialModel& model, std::uint64_t seed,
                                        SamplerMethod method) {
    return DiscSampler(model, method).sample(seed);
}

}  // namespace rfh
