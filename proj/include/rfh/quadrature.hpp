#pragma once

#include <functional>
#include <vector>

namespace rfh {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;   // absolute estimate (G16 vs G8 panel difference)
    int panels = 0;       // 1D panel count at convergence
    bool converged = false;
};

// Computes the planar pair integral over the disc B(0,R),
//
//   I = iint w(|x|) w(|y|) e^{-pi rho |x-y|^2} dx dy
//     = (2pi)^2 int int w(r) w(s) r s e^{-pi rho (r-s)^2} [e^{-2pi rho rs} I0(2pi rho rs)] dr ds,
//
// reduced to two dimensions by rotational symmetry; the bracketed factor is
// the exponentially scaled Bessel term, so nothing overflows. Panels are
// seeded geometrically from inner_scale (integrands like 1/(eps+r)^2 peak at
// the origin) and split adaptively until the G16/G8 discrepancy falls below
// tol_abs.
QuadResult planar_gaussian_pair_integral(double rho, double R,
                                         const std::function<double(double)>& w,
                                         double inner_scale, double tol_abs,
                                         int max_panels = 160);

}  // namespace rfh
