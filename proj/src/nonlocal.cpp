#include "fracbs/nonlocal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "fracbs/gbm.hpp"
#include "fracbs/special.hpp"

namespace fracbs {

NonlocalParts nonlocal_apply_parts(const SpaceTimeFn& f, const StableIndex& idx,
                                   double t, double x, const QuadSpec& q) {
    if (!(t > 0.0))
        throw std::domain_error("nonlocal_apply: t must be positive");
    if (!(x > 0.0))
        throw std::domain_error("nonlocal_apply: spot must be positive");
    const double a = idx.alpha;
    const double ftx = f.evaluator(t, x);
    const double tiny = 1e-12 * std::max(std::fabs(ftx), 1e-300);

    // outer rule: s = t u against the weight u^{-alpha} on [0,1]
    auto outer = jacobi_rule_01(q.jacobi_nodes, -a, 0.0);
    double acc_a = 0.0;
    double acc_b = 0.0;
    for (int i = 0; i < outer->nodes.size(); ++i) {
        const double u = outer->nodes[i];
        if (!(u > 1e-14))
            throw std::runtime_error("nonlocal_apply: outer node below 1e-14");
        const double s = t * u;
        LogRule inner;
        try {
            inner = gauss_log_rule(s, x, q, f.growth_beta, f.kink_log);
        } catch (const std::exception& e) {
            throw std::runtime_error("nonlocal_apply: inner rule at s=" +
                                     std::to_string(s) + " failed: " + e.what());
        }
        double h_a = 0.0;
        double p_s_ft = 0.0;
        for (int j = 0; j < inner.y.size(); ++j) {
            const double y = inner.y[j];
            const double f_now = f.evaluator(t, y);
            h_a += inner.w[j] * (f.evaluator(t - s, y) - f_now);
            p_s_ft += inner.w[j] * f_now;
        }
        double h_b = p_s_ft - ftx;
        if (std::fabs(h_a) < tiny && std::fabs(h_a) > 0.0) {
            // rescue the smooth factor by a centered quotient in the time slot
            double cq = 0.0;
            for (int j = 0; j < inner.y.size(); ++j)
                cq += inner.w[j] *
                      (f.evaluator(t - s, inner.y[j]) - f.evaluator(t + s, inner.y[j]));
            h_a = 0.5 * cq;
        }
        acc_a += outer->weights[i] * (h_a / u);
        acc_b += outer->weights[i] * (h_b / u);
    }
    const double scale = a * std::pow(t, -a) / gamma_fn(1.0 - a);
    NonlocalParts parts;
    parts.term_a = scale * acc_a;
    parts.term_b = scale * acc_b;
    parts.tail_term = levy_tail(idx, t) * ftx;
    parts.value = parts.tail_term - parts.term_a - parts.term_b;
    return parts;
}

double nonlocal_apply(const SpaceTimeFn& f, const StableIndex& idx, double t,
                      double x, const QuadSpec& q) {
    return nonlocal_apply_parts(f, idx, t, x, q).value;
}

SpaceTimeFn price_fn(const Model& m, const QuadSpec& q) {
    SpaceTimeFn f;
    f.evaluator = [m, q](double t, double x) { return frac_price(m, t, x, q); };
    f.growth_beta = 1.0;
    const double k = m.strike.k;
    f.payoff_at_zero = [k](double x) { return std::max(x - k, 0.0); };
    f.kink_log = std::log(k);
    return f;
}

double pde_residual(const Model& m, double t, double x, const QuadSpec& q) {
    const SpaceTimeFn f = price_fn(m, q);
    const double lhs = nonlocal_apply(f, m.idx, t, x, q);
    const double tail = levy_tail(m.idx, t);
    const double rhs = tail * std::max(x - m.strike.k, 0.0);
    return (lhs - rhs) / (tail * std::max(x, 1.0));
}

LaplaceCheck laplace_check(const Model& m, double lam, double x,
                           const QuadSpec& q) {
    if (!(lam > 3.0 / 8.0))
        throw std::domain_error("laplace_check: lambda must exceed 3/8");
    if (!(x > 0.0))
        throw std::domain_error("laplace_check: spot must be positive");
    const double a = m.idx.alpha;
    const SpaceTimeFn f = price_fn(m, q);
    auto op = [&](double t) { return nonlocal_apply(f, m.idx, t, x, q); };

    // [0, 1]: the operator behaves like t^{-alpha} near zero, so integrate
    // the smooth factor t^alpha e^{-lam t} op(t) against the Jacobi weight.
    auto head_rule = jacobi_rule_01(std::max(24, q.jacobi_nodes / 2), -a, 0.0);
    double head = 0.0;
    for (int i = 0; i < head_rule->nodes.size(); ++i) {
        const double t = head_rule->nodes[i];
        head += head_rule->weights[i] * std::pow(t, a) * std::exp(-lam * t) * op(t);
    }

    const double rhs = std::pow(lam, a - 1.0) * std::max(x - m.strike.k, 0.0);
    const double floor = std::pow(lam, a - 1.0);

    // [1, T_max]: exponential nodes via v = exp(-lam (t - 1)); truncation
    // where the integrand falls below 1e-12 of the comparison scale.
    const double bound_f = std::exp(std::fabs(std::log(x))) + x;
    double t_max = 1.0;
    while (std::exp(-lam * t_max) * bound_f > 1e-12 * floor && t_max < 400.0)
        t_max += 1.0;
    const double v_min = std::exp(-lam * (t_max - 1.0));
    auto leg = legendre_rule(std::max(48, q.legendre_nodes / 2));
    const double tail = std::exp(-lam) / lam *
                        legendre_integrate(*leg, v_min, 1.0, [&](double v) {
                            return op(1.0 - std::log(v) / lam);
                        });

    LaplaceCheck out;
    out.lhs = head + tail;
    out.rhs = rhs;
    out.gap = std::fabs(out.lhs - out.rhs) / std::max(rhs, floor);
    return out;
}

PmpResult pmp_check(const SpaceTimeFn& f, const StableIndex& idx, double horizon,
                    const Eigen::VectorXd& t_nodes,
                    const Eigen::VectorXd& x_nodes, const QuadSpec& q) {
    if (t_nodes.size() == 0 || x_nodes.size() == 0)
        throw std::domain_error("pmp_check: empty grid");
    for (int i = 0; i < t_nodes.size(); ++i)
        if (!(t_nodes[i] > 0.0 && t_nodes[i] <= horizon))
            throw std::domain_error("pmp_check: t_nodes must lie in (0, horizon]");

    double best_max = -std::numeric_limits<double>::infinity();
    double best_min = std::numeric_limits<double>::infinity();
    double tmax = 0, xmax = 0, tmin = 0, xmin = 0;
    for (int i = 0; i < t_nodes.size(); ++i) {
        for (int j = 0; j < x_nodes.size(); ++j) {
            const double v = f.evaluator(t_nodes[i], x_nodes[j]);
            if (v > best_max) { best_max = v; tmax = t_nodes[i]; xmax = x_nodes[j]; }
            if (v < best_min) { best_min = v; tmin = t_nodes[i]; xmin = x_nodes[j]; }
        }
    }
    double zero_max = -std::numeric_limits<double>::infinity();
    double zero_min = std::numeric_limits<double>::infinity();
    for (int j = 0; j < x_nodes.size(); ++j) {
        const double v0 = f.payoff_at_zero(x_nodes[j]);
        zero_max = std::max(zero_max, v0);
        zero_min = std::min(zero_min, v0);
    }

    if (best_max > zero_max) {
        // item (i): maximizer strictly above the time-zero slice
        const double op = nonlocal_apply(f, idx, tmax, xmax, q);
        const double stat = -op + levy_tail(idx, tmax) * f.payoff_at_zero(xmax);
        return {stat < 0.0 ? PmpVerdict::negative_as_required
                           : PmpVerdict::violated,
                stat, tmax, xmax};
    }
    if (best_min < zero_min) {
        // item (ii): minimizer strictly below the time-zero slice
        const double op = nonlocal_apply(f, idx, tmin, xmin, q);
        const double stat = -op + levy_tail(idx, tmin) * f.payoff_at_zero(xmin);
        return {stat > 0.0 ? PmpVerdict::positive_as_required
                           : PmpVerdict::violated,
                stat, tmin, xmin};
    }
    return {PmpVerdict::inconclusive, 0.0, 0.0, 0.0};
}

}  // namespace fracbs
