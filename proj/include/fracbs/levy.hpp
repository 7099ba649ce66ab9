#pragma once

namespace fracbs {

// Stability index of the subordinator, phi(lambda) = lambda^alpha.
// The pricing layer further restricts to (1/2, 1); the Levy-side
// quantities below are valid on all of (0, 1).
struct StableIndex {
    explicit StableIndex(double a);
    double alpha;
};

// Levy density  nu_alpha(s) = alpha s^{-alpha-1} / Gamma(1-alpha),  s > 0.
double levy_density(const StableIndex& idx, double s);

// Levy tail  nu-bar_alpha(t) = t^{-alpha} / Gamma(1-alpha),  t > 0.
double levy_tail(const StableIndex& idx, double t);

// I_phi(t) = integral of the tail over [0,t] = t^{1-alpha} / ((1-alpha) Gamma(1-alpha)).
double moment_i(const StableIndex& idx, double t);

// J_phi(t) = integral of s against nu_alpha over [0,t] = t^{1-alpha} / Gamma(2-alpha).
double moment_j(const StableIndex& idx, double t);

// Potential density  u^alpha(s) = s^{alpha-1} / Gamma(alpha),  s > 0.
double potential_density(const StableIndex& idx, double s);

// Gauss-Jacobi evaluation of the Sonine convolution
//   int_0^t u^alpha(tau) nu-bar_alpha(t - tau) dtau,
// which is identically 1. Returned for verification.
double sonine_check(const StableIndex& idx, double t, int n_nodes);

}  // namespace fracbs
