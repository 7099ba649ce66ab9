#include "fracbs/quad.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "fracbs/special.hpp"

namespace fracbs {

QuadSpec::QuadSpec(int hermite, int jacobi, int legendre, double tol)
    : hermite_nodes(hermite),
      jacobi_nodes(jacobi),
      legendre_nodes(legendre),
      abs_tol(tol) {
    if (hermite_nodes < 8 || jacobi_nodes < 8 || legendre_nodes < 8)
        throw std::domain_error("QuadSpec: node counts must be >= 8");
    if (!(abs_tol > 0.0))
        throw std::domain_error("QuadSpec: abs_tol must be positive");
}

namespace {

// Golub-Welsch: eigen-decompose the symmetric tridiagonal matrix built
// from the monic recurrence p_{k+1} = (x - a_k) p_k - c_k p_{k-1}.
GaussRulePtr golub_welsch(const Eigen::VectorXd& a, const Eigen::VectorXd& c,
                          double mu0) {
    const int n = static_cast<int>(a.size());
    Eigen::MatrixXd jm = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        jm(k, k) = a[k];
        if (k + 1 < n) {
            const double b = std::sqrt(c[k + 1]);
            jm(k, k + 1) = b;
            jm(k + 1, k) = b;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jm);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("golub_welsch: eigendecomposition failed");
    auto rule = std::make_shared<GaussRule>();
    rule->nodes = es.eigenvalues();
    rule->weights.resize(n);
    for (int i = 0; i < n; ++i) {
        const double v0 = es.eigenvectors()(0, i);
        rule->weights[i] = mu0 * v0 * v0;
    }
    return rule;
}

struct RuleKey {
    int kind;  // 0 = jacobi, 1 = hermite, 2 = legendre
    int n;
    double p;
    double q;
    bool operator<(const RuleKey& o) const {
        return std::tie(kind, n, p, q) < std::tie(o.kind, o.n, o.p, o.q);
    }
};

std::map<RuleKey, GaussRulePtr>& rule_cache() {
    static std::map<RuleKey, GaussRulePtr> cache;
    return cache;
}
std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

GaussRulePtr cached(const RuleKey& key, GaussRulePtr (*build)(const RuleKey&)) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = rule_cache().find(key);
        if (it != rule_cache().end()) return it->second;
    }
    GaussRulePtr rule = build(key);
    std::lock_guard<std::mutex> lock(cache_mutex());
    return rule_cache().emplace(key, rule).first->second;
}

GaussRulePtr build_jacobi(const RuleKey& key) {
    // [0,1] weight u^p (1-u)^q maps to the standard [-1,1] Jacobi weight
    // (1-x)^A (1+x)^B with A = q, B = p under u = (1+x)/2.
    const double A = key.q;
    const double B = key.p;
    const int n = key.n;
    const double s = A + B;
    Eigen::VectorXd a(n), c(n);
    a[0] = (B - A) / (s + 2.0);
    c[0] = 0.0;
    for (int k = 1; k < n; ++k) {
        const double den = (2.0 * k + s) * (2.0 * k + s + 2.0);
        a[k] = (B * B - A * A) / den;
        if (k == 1) {
            // cancelled form; the generic one is 0/0 when A + B = -1
            c[1] = 4.0 * (1.0 + A) * (1.0 + B) / ((2.0 + s) * (2.0 + s) * (3.0 + s));
        } else {
            c[k] = 4.0 * k * (k + A) * (k + B) * (k + s) /
                   ((2.0 * k + s) * (2.0 * k + s) * (2.0 * k + s + 1.0) *
                    (2.0 * k + s - 1.0));
        }
    }
    const double mu0 = std::pow(2.0, s + 1.0) * beta_fn(A + 1.0, B + 1.0);
    GaussRulePtr base = golub_welsch(a, c, mu0);
    // map nodes to [0,1], absorb the 2^{-(p+q+1)} scale into the weights
    auto rule = std::make_shared<GaussRule>();
    rule->nodes = (base->nodes.array() + 1.0) / 2.0;
    rule->weights = base->weights * std::pow(2.0, -(s + 1.0));
    return rule;
}

GaussRulePtr build_hermite(const RuleKey& key) {
    const int n = key.n;
    Eigen::VectorXd a = Eigen::VectorXd::Zero(n), c(n);
    c[0] = 0.0;
    for (int k = 1; k < n; ++k) c[k] = 0.5 * k;
    return golub_welsch(a, c, 1.7724538509055160273 /* sqrt(pi) */);
}

GaussRulePtr build_legendre(const RuleKey& key) {
    const int n = key.n;
    Eigen::VectorXd a = Eigen::VectorXd::Zero(n), c(n);
    c[0] = 0.0;
    for (int k = 1; k < n; ++k)
        c[k] = static_cast<double>(k) * k / (4.0 * k * k - 1.0);
    return golub_welsch(a, c, 2.0);
}

}  // namespace

GaussRulePtr jacobi_rule_01(int n, double p, double q) {
    if (n < 1) throw std::domain_error("jacobi_rule_01: n must be positive");
    if (!(p > -1.0) || !(q > -1.0))
        throw std::domain_error("jacobi_rule_01: exponents must exceed -1");
    return cached({0, n, p, q}, &build_jacobi);
}

GaussRulePtr hermite_rule(int n) {
    if (n < 1) throw std::domain_error("hermite_rule: n must be positive");
    return cached({1, n, 0.0, 0.0}, &build_hermite);
}

GaussRulePtr legendre_rule(int n) {
    if (n < 1) throw std::domain_error("legendre_rule: n must be positive");
    return cached({2, n, 0.0, 0.0}, &build_legendre);
}

}  // namespace fracbs
