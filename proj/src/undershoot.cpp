#include "fracbs/undershoot.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fracbs/special.hpp"

namespace fracbs {

UndershootLaw::UndershootLaw(StableIndex index, double horizon)
    : idx(index), t(horizon) {
    if (!(horizon > 0.0))
        throw std::domain_error("UndershootLaw: horizon must be positive");
}

double undershoot_density(const UndershootLaw& law, double s) {
    const double a = law.idx.alpha;
    if (!(s > 0.0) || !(s < law.t)) return 0.0;
    return std::pow(s, a - 1.0) * std::pow(law.t - s, -a) /
           (gamma_fn(a) * gamma_fn(1.0 - a));
}

double sample_direct(const UndershootLaw& law, Rng& rng) {
    const double a = law.idx.alpha;
    return law.t * rng.beta(a, 1.0 - a);
}

double stable_positive(const StableIndex& idx, Rng& rng) {
    const double a = idx.alpha;
    const double u = rng.uniform();
    const double w = rng.exponential();
    const double pu = M_PI * u;
    const double num = std::pow(std::sin(a * pu), a / (1.0 - a)) *
                       std::sin((1.0 - a) * pu);
    const double den = std::pow(std::sin(pu), 1.0 / (1.0 - a));
    return std::pow(num / (den * w), (1.0 - a) / a);
}

namespace {

// Operational horizon making P(no crossing of level t) <= 1e-6, from the
// Zolotarev left-tail estimate -log P(S <= r) ~ (1-a) a^{a/(1-a)} r^{-a/(1-a)}.
double operational_horizon(double alpha, double t) {
    const double c = (1.0 - alpha) * std::pow(alpha, alpha / (1.0 - alpha));
    const double r = std::pow(c / 16.2, (1.0 - alpha) / alpha);
    return std::pow(t / r, alpha);
}

}  // namespace

PathDraw sample_path_full(const UndershootLaw& law, Rng& rng, int n_steps) {
    if (n_steps < 1000)
        throw std::domain_error("sample_path: need at least 1e3 steps");
    const double a = law.idx.alpha;
    double u_max = operational_horizon(a, law.t);
    for (int attempt = 0; attempt < 10; ++attempt) {
        const double step_scale = std::pow(u_max / n_steps, 1.0 / a);
        double s = 0.0;
        for (int j = 0; j < n_steps; ++j) {
            const double next = s + step_scale * stable_positive(law.idx, rng);
            if (next > law.t) return {s, next};
            s = next;
        }
        u_max *= 2.0;
    }
    throw std::runtime_error(
        "sample_path: subordinator failed to cross the level after 10 horizon doublings");
}

double sample_path(const UndershootLaw& law, Rng& rng, int n_steps) {
    return sample_path_full(law, rng, n_steps).undershoot;
}

JointUndershoot sample_joint_path(const StableIndex& idx, double t, double T,
                                  Rng& rng, int n_steps) {
    if (!(t > 0.0) || !(T >= t))
        throw std::domain_error("sample_joint_path: need 0 < t <= T");
    if (n_steps < 1000)
        throw std::domain_error("sample_joint_path: need at least 1e3 steps");
    const double a = idx.alpha;
    double u_max = operational_horizon(a, T);
    for (int attempt = 0; attempt < 10; ++attempt) {
        const double step_scale = std::pow(u_max / n_steps, 1.0 / a);
        double s = 0.0;
        double under_t = -1.0;
        for (int j = 0; j < n_steps; ++j) {
            const double next = s + step_scale * stable_positive(idx, rng);
            if (under_t < 0.0 && next > t) under_t = s;
            if (next > T) return {under_t < 0.0 ? s : under_t, s};
            s = next;
        }
        u_max *= 2.0;
    }
    throw std::runtime_error(
        "sample_joint_path: subordinator failed to cross the maturity level");
}

}  // namespace fracbs
