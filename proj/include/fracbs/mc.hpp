#pragma once

#include <cstdint>

#include "fracbs/pricer.hpp"
#include "fracbs/rng.hpp"

namespace fracbs {

struct PathBatch {
    long n = 0;
    double estimate = 0.0;
    double se = 0.0;
    std::uint64_t seed = 0;
    double elapsed = 0.0;  // seconds
};

// Unconditional fractional price by Beta time change:
// per path H = t Beta(alpha, 1-alpha), payoff (x e^{sqrt(H) Z - H/2} - K)+.
// Antithetic Z pairs are on by default; disable for distributional tests.
// Estimates are bit-identical across runs and across worker counts
// (block-structured streams, pairwise reduction).
PathBatch mc_price(const Model& m, double t, double x, long n_paths, Rng& rng,
                   bool antithetic = true, int n_workers = 1);

// Martingale check for Z^m(t) = exp(m X_e(t) - m^2 H(t) / 2):
// estimates E[exp(m (b0 + sqrt(H) Z) - m^2 H / 2)], expected exp(m b0).
struct MartingaleCheck {
    PathBatch batch;
    double expected;
    bool pass;  // |estimate - expected| <= 4 SE
};
MartingaleCheck martingale_check(double m_exp, const StableIndex& idx, double t,
                                 double b0, long n_paths, Rng& rng);

// Cameron-Martin cross-check: the reweighted estimator under the original
// measure against the drift-form pricer, on a joint (H(t), H(T)) draw from
// a single subordinator trajectory.
struct CameronMartinCheck {
    double price_reweighted;
    double se_reweighted;
    double price_drift;
    double se_drift;
    double gap_in_se;  // |difference| / joint SE
};
CameronMartinCheck cameron_martin_check(const Model& m, double t, double x,
                                        long n_paths, Rng& rng,
                                        int path_steps = 2048);

}  // namespace fracbs
