#pragma once

#include <Eigen/Core>
#include <memory>

namespace fracbs {

// Quadrature configuration shared by the pricing and operator modules.
struct QuadSpec {
    int hermite_nodes = 64;
    int jacobi_nodes = 64;
    int legendre_nodes = 128;
    double abs_tol = 1e-10;

    QuadSpec() = default;
    QuadSpec(int hermite, int jacobi, int legendre, double tol);

    QuadSpec doubled() const {
        return QuadSpec(2 * hermite_nodes, 2 * jacobi_nodes,
                        2 * legendre_nodes, abs_tol);
    }
};

// Gaussian rule: sum_i weights[i] * f(nodes[i]) integrates f against the
// rule's weight function over its natural interval.
struct GaussRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};

using GaussRulePtr = std::shared_ptr<const GaussRule>;

// Gauss-Jacobi on [0,1] for the weight u^p (1-u)^q, p, q > -1.
// Built by Golub-Welsch from the Jacobi three-term recurrence; the
// exponents enter symbolically, the singular weight is never sampled.
GaussRulePtr jacobi_rule_01(int n, double p, double q);

// Gauss-Hermite for exp(-x^2) on the real line (physicists' weight).
GaussRulePtr hermite_rule(int n);

// Gauss-Legendre on [-1,1].
GaussRulePtr legendre_rule(int n);

// Integral of f over [a,b] with a single Legendre rule.
template <typename F>
double legendre_integrate(const GaussRule& rule, double a, double b, F&& f) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * acc;
}

}  // namespace fracbs
