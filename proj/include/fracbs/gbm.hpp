#pragma once

#include <functional>
#include <optional>

#include "fracbs/quad.hpp"

namespace fracbs {

struct Strike {
    explicit Strike(double strike);
    double k;
};

// Classical Black-Scholes call price q_BS(t, x) at zero rate and unit
// volatility; t is the maturity of the plain-vanilla call.
double bs_price(double t, double x, const Strike& K);

// dq_BS/dx.
double bs_delta(double t, double x, const Strike& K);

// d2q_BS/dx2.
double bs_gamma(double t, double x, const Strike& K);

// dq_BS/dt; equals (x^2/2) * bs_gamma in closed form.
double bs_theta(double t, double x, const Strike& K);

// GBM transition kernel p_GBM(t, y; x): density in y of x * exp(N(-t/2, t)).
double gbm_kernel(double t, double y, double x);

// Discrete rule with sum_j w[j] g(y[j]) ~= E[g(x exp(sqrt(t) Z - t/2))].
// Gauss-Hermite in log-space by default; when g has a kink at a known
// log-price inside the Gaussian bulk, the rule splits there and uses
// Legendre panels against the exact Gaussian so spectral accuracy
// survives the kink. All weights are nonnegative.
struct LogRule {
    Eigen::VectorXd y;
    Eigen::VectorXd w;
};
LogRule gauss_log_rule(double t, double x, const QuadSpec& q,
                       double growth_beta = 1.0,
                       std::optional<double> kink_log = std::nullopt);

// Semigroup action P_t f(x) = E[f(x exp(sqrt(t) Z - t/2))], evaluated in
// log-space against the exact Gaussian. The caller declares the growth
// index beta of f (|f(y)| <= C exp(beta |log y|)); the rule is rejected
// when beta sqrt(t) exceeds the Hermite node-count heuristic 2 sqrt(n).
double semigroup_apply(const std::function<double(double)>& f, double t,
                       double x, const QuadSpec& q, double growth_beta = 1.0,
                       std::optional<double> kink_log = std::nullopt);

// Closed form for P_t applied to f_{b1,b2}(y) = exp(b1 |log y| + b2 log y).
double semigroup_closed_exp(double b1, double b2, double t, double x);

// E[exp(l1 |B(t)| + l2 B(t))] for a Brownian motion started at x0.
double abs_exp_moment(double l1, double l2, double t, double x0);

}  // namespace fracbs
