#include "fracbs/gbm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fracbs/special.hpp"

namespace fracbs {

namespace {

constexpr double kTimeFloor = 1e-12;

void check_spot(double x, const char* who) {
    if (!(x > 0.0))
        throw std::domain_error(std::string(who) + ": spot must be positive");
}

}  // namespace

Strike::Strike(double strike) : k(strike) {
    if (!(strike > 0.0))
        throw std::domain_error("Strike: strike must be positive");
}

double bs_price(double t, double x, const Strike& K) {
    check_spot(x, "bs_price");
    if (t < 0.0) throw std::domain_error("bs_price: t must be nonnegative");
    if (t < kTimeFloor) return std::max(x - K.k, 0.0);
    const double lm = std::log(x / K.k);
    const double st = std::sqrt(t);
    return x * norm_cdf((2.0 * lm + t) / (2.0 * st)) -
           K.k * norm_cdf((2.0 * lm - t) / (2.0 * st));
}

double bs_delta(double t, double x, const Strike& K) {
    check_spot(x, "bs_delta");
    if (t < 0.0) throw std::domain_error("bs_delta: t must be nonnegative");
    if (t < kTimeFloor) {
        if (x > K.k) return 1.0;
        if (x < K.k) return 0.0;
        return 0.5;
    }
    return norm_cdf((2.0 * std::log(x / K.k) + t) / (2.0 * std::sqrt(t)));
}

double bs_gamma(double t, double x, const Strike& K) {
    check_spot(x, "bs_gamma");
    if (t <= 0.0) throw std::domain_error("bs_gamma: t must be positive");
    if (t < kTimeFloor) return 0.0;
    const double lm = std::log(x / K.k);
    return std::sqrt(K.k / (2.0 * M_PI * t * x * x * x)) *
           std::exp(-(4.0 * lm * lm + t * t) / (8.0 * t));
}

double bs_theta(double t, double x, const Strike& K) {
    check_spot(x, "bs_theta");
    if (t <= 0.0) throw std::domain_error("bs_theta: t must be positive");
    if (t < kTimeFloor) return 0.0;
    const double lm = std::log(x / K.k);
    return std::sqrt(K.k * x / (8.0 * M_PI * t)) *
           std::exp(-(4.0 * lm * lm + t * t) / (8.0 * t));
}

double gbm_kernel(double t, double y, double x) {
    if (!(t > 0.0)) throw std::domain_error("gbm_kernel: t must be positive");
    if (!(y > 0.0) || !(x > 0.0))
        throw std::domain_error("gbm_kernel: prices must be positive");
    const double w = std::log(y) - std::log(x);
    const double heat = std::exp(-w * w / (2.0 * t)) / std::sqrt(2.0 * M_PI * t);
    return std::sqrt(x) * std::exp(-t / 8.0) * heat / std::pow(y, 1.5);
}

LogRule gauss_log_rule(double t, double x, const QuadSpec& q,
                       double growth_beta, std::optional<double> kink_log) {
    check_spot(x, "gauss_log_rule");
    if (!(t > 0.0))
        throw std::domain_error("gauss_log_rule: t must be positive");
    if (growth_beta < 0.0)
        throw std::domain_error("gauss_log_rule: growth_beta must be >= 0");

    const double st = std::sqrt(t);
    if (growth_beta * st > 2.0 * std::sqrt(static_cast<double>(q.hermite_nodes)))
        throw std::runtime_error(
            "gauss_log_rule: growth index " + std::to_string(growth_beta) +
            " exceeds Hermite convergence heuristic at t=" + std::to_string(t));

    const double lx = std::log(x);
    // the Gaussian tail past z_inf is below exp(-50) relative to the bulk
    const double z_inf = std::max(10.0, growth_beta * st + 10.0);

    LogRule out;
    if (kink_log) {
        const double z_star = (*kink_log - lx + 0.5 * t) / st;
        if (std::fabs(z_star) < z_inf - 1.0) {
            auto leg = legendre_rule(std::max(48, q.legendre_nodes / 2));
            const int nleg = static_cast<int>(leg->nodes.size());
            const double edges[5] = {-z_inf, std::max(-z_inf, z_star - 4.0),
                                     z_star, std::min(z_inf, z_star + 4.0),
                                     z_inf};
            out.y.resize(4 * nleg);
            out.w.resize(4 * nleg);
            int k = 0;
            for (int p = 0; p < 4; ++p) {
                const double a = edges[p], b = edges[p + 1];
                if (!(b > a)) continue;
                const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
                for (int i = 0; i < nleg; ++i, ++k) {
                    const double z = mid + half * leg->nodes[i];
                    out.y[k] = x * std::exp(st * z - 0.5 * t);
                    out.w[k] = half * leg->weights[i] * norm_pdf(z);
                }
            }
            out.y.conservativeResize(k);
            out.w.conservativeResize(k);
            return out;
        }
    }

    auto rule = hermite_rule(q.hermite_nodes);
    const int n = static_cast<int>(rule->nodes.size());
    const double scale = std::sqrt(2.0 * t);
    out.y.resize(n);
    out.w.resize(n);
    for (int i = 0; i < n; ++i) {
        out.y[i] = x * std::exp(scale * rule->nodes[i] - 0.5 * t);
        out.w[i] = rule->weights[i] / 1.7724538509055160273;  // sqrt(pi)
    }
    return out;
}

double semigroup_apply(const std::function<double(double)>& f, double t,
                       double x, const QuadSpec& q, double growth_beta,
                       std::optional<double> kink_log) {
    check_spot(x, "semigroup_apply");
    if (t < 0.0)
        throw std::domain_error("semigroup_apply: t must be nonnegative");
    if (t < kTimeFloor) return f(x);
    const LogRule rule = gauss_log_rule(t, x, q, growth_beta, kink_log);
    double acc = 0.0;
    for (int i = 0; i < rule.y.size(); ++i) {
        const double fy = f(rule.y[i]);
        if (!std::isfinite(fy))
            throw std::runtime_error(
                "semigroup_apply: non-finite integrand at node " +
                std::to_string(i) + " (y=" + std::to_string(rule.y[i]) + ")");
        acc += rule.w[i] * fy;
    }
    return acc;
}

double semigroup_closed_exp(double b1, double b2, double t, double x) {
    check_spot(x, "semigroup_closed_exp");
    if (t < 0.0)
        throw std::domain_error("semigroup_closed_exp: t must be nonnegative");
    if (b1 < 0.0)
        throw std::domain_error("semigroup_closed_exp: b1 must be >= 0");
    const double lx = std::log(x);
    if (t < kTimeFloor) return std::exp(b1 * std::fabs(lx) + b2 * lx);
    const double st = std::sqrt(t);
    const double sp = b1 + b2;
    const double sm = b1 - b2;
    return std::exp(sp * lx + 0.5 * sp * (sp - 1.0) * t) *
               norm_cdf((sp - 0.5) * st + lx / st) +
           std::exp(-sm * lx + 0.5 * sm * (sm + 1.0) * t) *
               norm_cdf((sm + 0.5) * st - lx / st);
}

double abs_exp_moment(double l1, double l2, double t, double x0) {
    if (!(t > 0.0))
        throw std::domain_error("abs_exp_moment: t must be positive");
    if (!std::isfinite(l1) || !std::isfinite(l2) || !std::isfinite(x0))
        throw std::domain_error("abs_exp_moment: non-finite input");
    const double st = std::sqrt(t);
    const double sp = l1 + l2;
    const double sm = l1 - l2;
    return std::exp(sp * x0 + 0.5 * sp * sp * t) * norm_cdf((sp * t + x0) / st) +
           std::exp(-sm * x0 + 0.5 * sm * sm * t) * norm_cdf((sm * t - x0) / st);
}

}  // namespace fracbs
