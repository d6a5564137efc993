#pragma once

namespace rfh {

// Regularized lower incomplete gamma P(s,x) = gamma(s,x)/Gamma(s).
// Series expansion for x < s+1, Lentz continued fraction otherwise; never
// computed through explicit factorials, so it stays well-scaled for
// arguments up to ~1e4 and beyond.
double reg_gamma_lower(double s, double x);

// Complement Q(s,x) = 1 - P(s,x).
double reg_gamma_upper(double s, double x);

// Solves P(s,x) = p for x, p in [0,1). Bracketed Newton iteration.
double reg_gamma_lower_inv(double s, double p);

// Exponentially scaled modified Bessel function e^{-|x|} I0(x).
double bessel_i0e(double x);

}  // namespace rfh
