#pragma once

#include "fracbs/levy.hpp"
#include "fracbs/rng.hpp"

namespace fracbs {

// Law of the undershooting H(t) of the alpha-stable subordinator at a
// fixed horizon t; H(t) is distributed as t * Beta(alpha, 1-alpha).
struct UndershootLaw {
    UndershootLaw(StableIndex index, double horizon);
    StableIndex idx;
    double t;
};

// Density g(s; t) = s^{alpha-1} (t-s)^{-alpha} / (Gamma(alpha) Gamma(1-alpha))
// on (0, t), zero outside.
double undershoot_density(const UndershootLaw& law, double s);

// Production sampler: t * Beta(alpha, 1-alpha) from two Gamma variates.
double sample_direct(const UndershootLaw& law, Rng& rng);

// Path-level oracle: simulate the subordinator on a uniform operational
// grid and read the undershoot off the first crossing of level t.
// Exists to validate the self-similar law independently of the Beta
// shortcut; the distributional tests compare the two samplers.
struct PathDraw {
    double undershoot;
    double overshoot;  // subordinator value just after the crossing
};
PathDraw sample_path_full(const UndershootLaw& law, Rng& rng, int n_steps);
double sample_path(const UndershootLaw& law, Rng& rng, int n_steps);

// Standard positive alpha-stable variate with E exp(-l S) = exp(-l^alpha)
// (Kanter's transform).
double stable_positive(const StableIndex& idx, Rng& rng);

// Ordered pair (H(t), H(T)), t <= T, read off a single subordinator
// trajectory. The Beta shortcut only gives marginals; the joint law is
// what the change-of-measure check needs.
struct JointUndershoot {
    double h_t;
    double h_T;
};
JointUndershoot sample_joint_path(const StableIndex& idx, double t, double T,
                                  Rng& rng, int n_steps);

}  // namespace fracbs
