#include "fracbs/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace fracbs {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), eng_(make_engine(seed, stream)) {}

double Rng::uniform() {
    // 52 random bits shifted into (0,1); both endpoints excluded
    return (static_cast<double>(eng_() >> 12) + 0.5) * 0x1p-52;
}

double Rng::normal() {
    if (have_cached_normal_) {
        have_cached_normal_ = false;
        return cached_normal_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 6.283185307179586477 * u2;
    cached_normal_ = r * std::sin(th);
    have_cached_normal_ = true;
    return r * std::cos(th);
}

double Rng::gamma(double shape) {
    if (!(shape > 0.0)) throw std::domain_error("Rng::gamma: shape must be positive");
    if (shape < 1.0) {
        const double g = gamma(shape + 1.0);
        return g * std::pow(uniform(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double Rng::beta(double a, double b) {
    const double ga = gamma(a);
    const double gb = gamma(b);
    return ga / (ga + gb);
}

double Rng::exponential() { return -std::log(uniform()); }

}  // namespace fracbs
