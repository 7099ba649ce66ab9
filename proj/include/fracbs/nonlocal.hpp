#pragma once

#include <Eigen/Core>
#include <functional>
#include <optional>

#include "fracbs/levy.hpp"
#include "fracbs/pricer.hpp"
#include "fracbs/quad.hpp"

namespace fracbs {

// Space-time function fed to the coupled operator. evaluator(0, x) must
// agree with payoff_at_zero(x); kink_log marks a log-price where the
// time-zero slice loses smoothness (the call payoff sets it to log K).
struct SpaceTimeFn {
    std::function<double(double, double)> evaluator;  // (t, x)
    double growth_beta = 1.0;
    std::function<double(double)> payoff_at_zero;
    std::optional<double> kink_log;
};

// phi(d_t - G) f (t, x) for phi(l) = l^alpha, via the three-term split
//   -phi(d_t-G) f = A + B - tail(t) f(t,x),
//   A = int_0^t (P_s f(t-s,.) - P_s f(t,.))(x) nu(ds),
//   B = int_0^t (P_s f(t,.) - f(t,x))(x) nu(ds).
// Both integrands vanish linearly at s = 0; the smooth factors are
// integrated against the Jacobi weight s^{-alpha} on [0, t].
struct NonlocalParts {
    double term_a;
    double term_b;
    double tail_term;  // tail(t) * f(t, x)
    double value;      // phi(d_t - G) f = tail_term - term_a - term_b
};
NonlocalParts nonlocal_apply_parts(const SpaceTimeFn& f, const StableIndex& idx,
                                   double t, double x, const QuadSpec& q);
double nonlocal_apply(const SpaceTimeFn& f, const StableIndex& idx, double t,
                      double x, const QuadSpec& q);

// Wraps frac_price of the model as a SpaceTimeFn.
SpaceTimeFn price_fn(const Model& m, const QuadSpec& q);

// Normalized residual of the fractional Black-Scholes equation:
//   [phi(d_t-G) q - tail(t) (x-K)+] / (tail(t) max(x, 1)).
double pde_residual(const Model& m, double t, double x, const QuadSpec& q);

// Laplace-domain identity: the transform of phi(d_t-G) q equals
// lambda^{alpha-1} (x-K)+ for lambda > 3/8.
struct LaplaceCheck {
    double lhs;
    double rhs;
    double gap;  // |lhs - rhs| / max(rhs, lambda^{alpha-1})
};
LaplaceCheck laplace_check(const Model& m, double lam, double x,
                           const QuadSpec& q);

// Positive maximum principle at the grid extremum of f over (0,T] x grid.
enum class PmpVerdict {
    negative_as_required,  // item (i): strict negativity at the maximizer
    positive_as_required,  // item (ii): strict positivity at the minimizer
    inconclusive,          // extremum hypothesis not met on the grid
    violated,
};
struct PmpResult {
    PmpVerdict verdict;
    double statistic;  // -phi(d_t-G) f(t*, x*) + tail(t*) f(0, x*)
    double t_star;
    double x_star;
};
PmpResult pmp_check(const SpaceTimeFn& f, const StableIndex& idx, double horizon,
                    const Eigen::VectorXd& t_nodes,
                    const Eigen::VectorXd& x_nodes, const QuadSpec& q);

}  // namespace fracbs
