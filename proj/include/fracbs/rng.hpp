#pragma once

#include <cstdint>
#include <random>

namespace fracbs {

// Deterministic stream generator: identical (seed, stream) reproduces the
// identical draw sequence. Parallel Monte Carlo derives one stream per
// worker block by counter offset.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    // Uniform on (0,1), endpoints excluded.
    double uniform();

    // Standard normal (Box-Muller, cached pair).
    double normal();

    // Gamma(shape, 1) via Marsaglia-Tsang, with the U^{1/shape} boost for
    // shape < 1.
    double gamma(double shape);

    // Beta(a, b) as G_a / (G_a + G_b).
    double beta(double a, double b);

    // Exponential(1).
    double exponential();

  private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 eng_;
    bool have_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

}  // namespace fracbs
