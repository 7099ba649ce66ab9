#pragma once

namespace fracbs {

// Standard normal CDF, evaluated through a rational complementary error
// function so the far tails keep full relative accuracy.
double norm_cdf(double z);

// Standard normal density.
double norm_pdf(double z);

// Complementary error function, Cody-style rational approximation.
double erfc_rational(double x);

// log Gamma(x) for x > 0 (Lanczos, g = 7, 9 coefficients).
double ln_gamma(double x);

// Gamma(x) for x > 0.
double gamma_fn(double x);

// Euler Beta function B(a, b), a, b > 0.
double beta_fn(double a, double b);

// Kummer confluent hypergeometric 1F1(a; b; z) by direct series.
// Valid for b > 0 and |z| <= 50; throws on non-convergence.
double hyp1f1(double a, double b, double z);

}  // namespace fracbs
