#include "fracbs/levy.hpp"

#include <cmath>
#include <stdexcept>

#include "fracbs/quad.hpp"
#include "fracbs/special.hpp"

namespace fracbs {

StableIndex::StableIndex(double a) : alpha(a) {
    if (!(a > 0.0 && a < 1.0))
        throw std::domain_error("StableIndex: alpha must lie in (0,1)");
}

double levy_density(const StableIndex& idx, double s) {
    if (!(s > 0.0)) throw std::domain_error("levy_density: s must be positive");
    const double a = idx.alpha;
    return a * std::pow(s, -a - 1.0) / gamma_fn(1.0 - a);
}

double levy_tail(const StableIndex& idx, double t) {
    if (!(t > 0.0)) throw std::domain_error("levy_tail: t must be positive");
    const double a = idx.alpha;
    return std::pow(t, -a) / gamma_fn(1.0 - a);
}

double moment_i(const StableIndex& idx, double t) {
    if (!(t > 0.0)) throw std::domain_error("moment_i: t must be positive");
    const double a = idx.alpha;
    return std::pow(t, 1.0 - a) / ((1.0 - a) * gamma_fn(1.0 - a));
}

double moment_j(const StableIndex& idx, double t) {
    if (!(t > 0.0)) throw std::domain_error("moment_j: t must be positive");
    const double a = idx.alpha;
    return std::pow(t, 1.0 - a) / gamma_fn(2.0 - a);
}

double potential_density(const StableIndex& idx, double s) {
    if (!(s > 0.0))
        throw std::domain_error("potential_density: s must be positive");
    const double a = idx.alpha;
    return std::pow(s, a - 1.0) / gamma_fn(a);
}

double sonine_check(const StableIndex& idx, double t, int n_nodes) {
    if (!(t > 0.0)) throw std::domain_error("sonine_check: t must be positive");
    if (n_nodes < 8) throw std::domain_error("sonine_check: need >= 8 nodes");
    const double a = idx.alpha;
    // tau = t u turns the convolution into the Beta(alpha, 1-alpha) weight
    // on [0,1] with a constant smooth factor.
    auto rule = jacobi_rule_01(n_nodes, a - 1.0, -a);
    const double norm = 1.0 / (gamma_fn(a) * gamma_fn(1.0 - a));
    return rule->weights.sum() * norm;
}

}  // namespace fracbs
