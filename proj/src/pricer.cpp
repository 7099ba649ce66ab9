#include "fracbs/pricer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fracbs/special.hpp"

namespace fracbs {

namespace {

constexpr double kDegenerateTime = 1e-10;

void check_args(double t, double x, const char* who) {
    if (t < 0.0)
        throw std::domain_error(std::string(who) + ": t must be nonnegative");
    if (!(x > 0.0))
        throw std::domain_error(std::string(who) + ": spot must be positive");
}

double beta_norm(double a) { return gamma_fn(a) * gamma_fn(1.0 - a); }

}  // namespace

Model::Model(StableIndex index, Strike strike_in, double maturity_in, double offset_v)
    : idx(index), strike(strike_in), maturity(maturity_in), v(offset_v) {
    if (!(idx.alpha > 0.5))
        throw std::domain_error("Model: pricing requires alpha in (1/2, 1)");
    if (!(maturity > 0.0))
        throw std::domain_error("Model: maturity must be positive");
    if (v > 0.0)
        throw std::domain_error("Model: offset v must be <= 0");
}

double frac_price(const Model& m, double t, double x, const QuadSpec& q) {
    check_args(t, x, "frac_price");
    if (t < kDegenerateTime) return std::max(x - m.strike.k, 0.0);
    const double a = m.idx.alpha;
    auto rule = jacobi_rule_01(q.jacobi_nodes, a - 1.0, -a);
    double acc = 0.0;
    for (int i = 0; i < rule->nodes.size(); ++i)
        acc += rule->weights[i] * bs_price(t * rule->nodes[i], x, m.strike);
    return acc / beta_norm(a);
}

double frac_delta(const Model& m, double t, double x, const QuadSpec& q) {
    check_args(t, x, "frac_delta");
    if (t < kDegenerateTime) {
        if (x > m.strike.k) return 1.0;
        if (x < m.strike.k) return 0.0;
        return 0.5;
    }
    const double a = m.idx.alpha;
    auto rule = jacobi_rule_01(q.jacobi_nodes, a - 1.0, -a);
    double acc = 0.0;
    for (int i = 0; i < rule->nodes.size(); ++i)
        acc += rule->weights[i] * bs_delta(t * rule->nodes[i], x, m.strike);
    return acc / beta_norm(a);
}

std::optional<double> frac_gamma(const Model& m, double t, double x,
                                 const QuadSpec& q) {
    if (t <= 0.0) throw std::domain_error("frac_gamma: t must be positive");
    if (!(x > 0.0)) throw std::domain_error("frac_gamma: spot must be positive");
    if (t < kDegenerateTime) return std::nullopt;
    const double a = m.idx.alpha;
    // sqrt(s) bs_gamma(s, x) is bounded and analytic at s = 0 even at the
    // strike, so the 1/sqrt(s) piece moves into the Jacobi exponent.
    auto rule = jacobi_rule_01(q.jacobi_nodes, a - 1.5, -a);
    const double pref = std::sqrt(m.strike.k / (2.0 * M_PI * x * x * x));
    const double lm = std::log(x / m.strike.k);
    double acc = 0.0;
    for (int i = 0; i < rule->nodes.size(); ++i) {
        const double s = t * rule->nodes[i];
        acc += rule->weights[i] *
               std::exp(-(4.0 * lm * lm + s * s) / (8.0 * s));
    }
    return pref * acc / (std::sqrt(t) * beta_norm(a));
}

std::optional<double> frac_generator(const Model& m, double t, double x,
                                     const QuadSpec& q) {
    auto g = frac_gamma(m, t, x, q);
    if (!g) return std::nullopt;
    return 0.5 * x * x * *g;
}

SlopeCheck time_slope_bound(const Model& m, double t, double x,
                            const QuadSpec& q) {
    if (!(t > 0.0))
        throw std::domain_error("time_slope_bound: t must be positive");
    const double h = 1e-4 * t;
    const double slope =
        (frac_price(m, t + h, x, q) - frac_price(m, t - h, x, q)) / (2.0 * h);
    const double a = m.idx.alpha;
    const double bound = gamma_fn(a + 0.5) / (M_PI * gamma_fn(a)) *
                         std::sqrt(m.strike.k * x / t);
    const double limit = bound * (1.0 + 1e-3);
    return {std::fabs(slope) <= limit, slope, bound, limit - std::fabs(slope)};
}

double u_beta(double b, double t, double x) {
    if (b < 0.0) throw std::domain_error("u_beta: beta must be >= 0");
    check_args(t, x, "u_beta");
    return semigroup_closed_exp(b, 0.0, t, x);
}

UBetaDerivs u_beta_derivs(double b, double t, double x) {
    if (b < 0.0) throw std::domain_error("u_beta_derivs: beta must be >= 0");
    if (!(t > 0.0) || !(x > 0.0))
        throw std::domain_error("u_beta_derivs: t and x must be positive");
    const double lx = std::log(x);
    const double st = std::sqrt(t);
    const double A = std::exp(b * lx + 0.5 * b * (b - 1.0) * t);
    const double B = std::exp(-b * lx + 0.5 * b * (b + 1.0) * t);
    const double phi1 = norm_cdf((b - 0.5) * st + lx / st);
    const double phi2 = norm_cdf((b + 0.5) * st - lx / st);
    // common Gaussian factor A phi(theta1) = B phi(theta2)
    const double gauss =
        std::exp(0.5 * lx - t / 8.0 - lx * lx / (2.0 * t)) *
        0.39894228040143267794;
    UBetaDerivs d;
    d.value = A * phi1 + B * phi2;
    d.dx = b / x * (A * phi1 - B * phi2);
    d.dxx = b * (b - 1.0) * A / (x * x) * phi1 +
            b * (b + 1.0) * B / (x * x) * phi2 +
            2.0 * b * gauss / (x * x * st);
    d.dt = 0.5 * b * (b - 1.0) * A * phi1 + 0.5 * b * (b + 1.0) * B * phi2 +
           b * gauss / st;
    return d;
}

double q_beta(const StableIndex& idx, double b, double t, double x,
              const QuadSpec& q) {
    if (b < 0.0) throw std::domain_error("q_beta: beta must be >= 0");
    check_args(t, x, "q_beta");
    if (t < kDegenerateTime) return std::exp(b * std::fabs(std::log(x)));
    const double a = idx.alpha;
    auto rule = jacobi_rule_01(q.jacobi_nodes, a - 1.0, -a);
    double acc = 0.0;
    for (int i = 0; i < rule->nodes.size(); ++i)
        acc += rule->weights[i] * u_beta(b, t * rule->nodes[i], x);
    return acc / beta_norm(a);
}

double c_beta_lower(double b, double t) {
    if (b < 0.0) throw std::domain_error("c_beta_lower: beta must be >= 0");
    if (!(t > 0.0)) throw std::domain_error("c_beta_lower: t must be positive");
    const double decay = std::exp(0.5 * b * (b - 1.0) * t);
    if (b <= 0.5) return 0.5 * decay;
    const double phi = norm_cdf(-(b - 0.5) * std::sqrt(t));
    if (b <= 1.0) return decay * phi;
    return phi;
}

SurfaceGrid price_surface(const Model& m, const Eigen::VectorXd& t_nodes,
                          const Eigen::VectorXd& x_nodes, const QuadSpec& q) {
    for (int i = 1; i < t_nodes.size(); ++i)
        if (!(t_nodes[i] > t_nodes[i - 1]))
            throw std::domain_error("price_surface: t_nodes must be sorted ascending");
    for (int j = 1; j < x_nodes.size(); ++j)
        if (!(x_nodes[j] > x_nodes[j - 1]))
            throw std::domain_error("price_surface: x_nodes must be sorted ascending");
    SurfaceGrid grid;
    grid.t_nodes = t_nodes;
    grid.x_nodes = x_nodes;
    grid.kind = SurfaceKind::price;
    grid.values.resize(t_nodes.size(), x_nodes.size());
    for (int i = 0; i < t_nodes.size(); ++i) {
        for (int j = 0; j < x_nodes.size(); ++j) {
            double value;
            try {
                value = frac_price(m, t_nodes[i], x_nodes[j], q);
            } catch (const std::exception& e) {
                throw std::runtime_error(
                    "price_surface: element (t=" + std::to_string(t_nodes[i]) +
                    ", x=" + std::to_string(x_nodes[j]) + ") failed: " + e.what());
            }
            if (!std::isfinite(value))
                throw std::runtime_error(
                    "price_surface: non-finite value at (t=" +
                    std::to_string(t_nodes[i]) + ", x=" +
                    std::to_string(x_nodes[j]) + ")");
            grid.values(i, j) = value;
        }
    }
    return grid;
}

}  // namespace fracbs
