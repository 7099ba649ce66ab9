#pragma once

#include "fracbs/mc.hpp"
#include "fracbs/pricer.hpp"
#include "fracbs/rng.hpp"

namespace fracbs {

// State for pricing conditional on a positive sojourn: calendar time t,
// spot x, age w of the running sojourn, subordinator offset v. The
// operational time already consumed is t - v - w.
struct SojournState {
    SojournState(double t_in, double x_in, double w_in, double v_in);
    double t;
    double x;
    double w;
    double v;
};

// One draw from the conditional jump kernel K_w: total sojourn duration
// tau >= w and log-price jump height h ~ N(0, tau) given tau.
struct KernelDraw {
    double duration;
    double height;
};

// K_w(R x [a, infinity)) = (a / w)^{-alpha}: the duration tail is Pareto
// because the heat kernel integrates to one in the height variable.
double kernel_tail_mass(const StableIndex& idx, double w, double a);

KernelDraw sample_kernel(const StableIndex& idx, double w, Rng& rng);

// The two readings of the renewal formula's price argument. The proof
// writes the continuation state as log(x)+y+t-w+tau-v; reading A feeds
// exp of that directly, reading B treats the time-like part as the
// accumulated measure-change discount exp(-(t-w+tau-v)/2) on x e^y.
enum class RenewalInterp { A, B };

// Renewal price at positive sojourn: deterministic stay term plus the
// kernel average of the zero-age price over renewals before maturity.
double sojourn_price(const SojournState& state, const Model& m,
                     const QuadSpec& q, RenewalInterp interp = RenewalInterp::B);

// Conditional path oracle realizing the same expectation by simulation:
// draw the residual sojourn; if it outlives maturity pay the frozen
// discounted price, otherwise restart the zero-age process at the jumped
// price and finish with the unconditional drift-form draw.
PathBatch mc_sojourn_price(const SojournState& state, const Model& m,
                           long n_paths, Rng& rng);

}  // namespace fracbs
