#pragma once

#include <Eigen/Core>
#include <optional>

#include "fracbs/gbm.hpp"
#include "fracbs/levy.hpp"
#include "fracbs/quad.hpp"

namespace fracbs {

// Market/model parameters of the fractional pricing problem.
struct Model {
    Model(StableIndex index, Strike strike, double maturity, double offset_v = 0.0);
    StableIndex idx;   // restricted to (1/2, 1)
    Strike strike;
    double maturity;
    double v;          // subordinator start offset, <= 0
};

enum class SurfaceKind { price, delta, gamma, generator, residual };

struct SurfaceGrid {
    Eigen::VectorXd t_nodes;  // sorted, positive
    Eigen::VectorXd x_nodes;  // sorted, positive
    Eigen::MatrixXd values;   // values(i, j) = f(t_nodes[i], x_nodes[j])
    SurfaceKind kind = SurfaceKind::price;
};

// Fractional call price q(t, x): Beta(alpha, 1-alpha)-weighted average of
// the classical price over rescaled maturities.
double frac_price(const Model& m, double t, double x, const QuadSpec& q);

// dq/dx, in [0, 1].
double frac_delta(const Model& m, double t, double x, const QuadSpec& q);

// d2q/dx2; empty when t is below the degeneracy floor (payoff kink).
std::optional<double> frac_gamma(const Model& m, double t, double x,
                                 const QuadSpec& q);

// G q = (x^2/2) d2q/dx2.
std::optional<double> frac_generator(const Model& m, double t, double x,
                                     const QuadSpec& q);

// Finite-difference |dq/dt| against the analytic slope bound
// Gamma(alpha+1/2)/(pi Gamma(alpha)) sqrt(Kx/t).
struct SlopeCheck {
    bool pass;
    double slope;   // finite-difference dq/dt
    double bound;   // analytic bound
    double margin;  // bound * (1 + tol) - |slope|
};
SlopeCheck time_slope_bound(const Model& m, double t, double x,
                            const QuadSpec& q);

// Auxiliary comparison solution u_beta(t, x) = P_t exp(beta |log .|) and
// its closed-form derivatives.
double u_beta(double b, double t, double x);
struct UBetaDerivs {
    double value;
    double dx;
    double dxx;
    double dt;  // equals (x^2/2) dxx
};
UBetaDerivs u_beta_derivs(double b, double t, double x);

// q_beta(t, x): Beta-weighted average of u_beta, the special solution used
// by the uniqueness argument.
double q_beta(const StableIndex& idx, double b, double t, double x,
              const QuadSpec& q);

// Piecewise lower-bound constant C_beta(t) with
// q_beta(t, x) >= C_beta(t) exp(beta |log x|).
double c_beta_lower(double b, double t);

// Element-wise frac_price over a rectangular lattice.
SurfaceGrid price_surface(const Model& m, const Eigen::VectorXd& t_nodes,
                          const Eigen::VectorXd& x_nodes, const QuadSpec& q);

}  // namespace fracbs
