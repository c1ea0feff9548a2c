#pragma once

namespace ciprng::battery {

// Complementary error function. Relative error below 1e-12 over the range
// the tests use (|x| <= 26, beyond which the result underflows).
double erfc(double x);

// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
// Series for x < a + 1, Lentz continued fraction otherwise. Requires a > 0;
// x <= 0 gives 1.
double gamma_q(double a, double x);

// Regularized lower incomplete gamma P(a, x) = 1 - Q(a, x).
double gamma_p(double a, double x);

// Standard normal CDF.
double normal_cdf(double x);

}  // namespace ciprng::battery
