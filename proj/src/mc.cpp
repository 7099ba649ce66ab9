#include "fracbs/mc.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "fracbs/undershoot.hpp"

namespace fracbs {

namespace {

constexpr long kBlockSize = 8192;

struct BlockSums {
    double sum = 0.0;
    double sum_sq = 0.0;
    long n = 0;
};

// Deterministic pairwise reduction over block partials, independent of
// which worker produced them.
BlockSums pairwise_merge(const std::vector<BlockSums>& blocks, long lo, long hi) {
    if (hi - lo == 1) return blocks[lo];
    const long mid = lo + (hi - lo) / 2;
    const BlockSums left = pairwise_merge(blocks, lo, mid);
    const BlockSums right = pairwise_merge(blocks, mid, hi);
    return {left.sum + right.sum, left.sum_sq + right.sum_sq, left.n + right.n};
}

template <typename PerPath>
PathBatch run_blocks(std::uint64_t seed, long n_paths, int n_workers,
                     PerPath per_path) {
    const auto start = std::chrono::steady_clock::now();
    const long n_blocks = (n_paths + kBlockSize - 1) / kBlockSize;
    std::vector<BlockSums> blocks(n_blocks);

    auto run_range = [&](long first_block, long stride) {
        for (long b = first_block; b < n_blocks; b += stride) {
            Rng rng(seed, static_cast<std::uint64_t>(b) + 1);
            const long lo = b * kBlockSize;
            const long hi = std::min(n_paths, lo + kBlockSize);
            BlockSums sums;
            for (long i = lo; i < hi; ++i) {
                const double p = per_path(rng);
                sums.sum += p;
                sums.sum_sq += p * p;
                ++sums.n;
            }
            blocks[b] = sums;
        }
    };

    if (n_workers <= 1 || n_blocks == 1) {
        run_range(0, 1);
    } else {
        std::vector<std::thread> pool;
        const int k = static_cast<int>(std::min<long>(n_workers, n_blocks));
        pool.reserve(k);
        for (int w = 0; w < k; ++w) pool.emplace_back(run_range, w, k);
        for (auto& th : pool) th.join();
    }

    const BlockSums total = pairwise_merge(blocks, 0, n_blocks);
    PathBatch out;
    out.n = total.n;
    out.estimate = total.sum / total.n;
    const double var =
        std::max(0.0, total.sum_sq / total.n - out.estimate * out.estimate);
    out.se = std::sqrt(var / total.n);
    out.seed = seed;
    out.elapsed = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace

PathBatch mc_price(const Model& m, double t, double x, long n_paths, Rng& rng,
                   bool antithetic, int n_workers) {
    if (!(t > 0.0)) throw std::domain_error("mc_price: t must be positive");
    if (!(x >= 0.0)) throw std::domain_error("mc_price: spot must be nonnegative");
    if (n_paths < 1000) throw std::domain_error("mc_price: need >= 1e3 paths");
    const double a = m.idx.alpha;
    const double k = m.strike.k;
    auto per_path = [=](Rng& r) {
        const double h = t * r.beta(a, 1.0 - a);
        const double z = r.normal();
        const double sh = std::sqrt(h);
        const double p1 = std::max(x * std::exp(sh * z - 0.5 * h) - k, 0.0);
        if (!antithetic) return p1;
        const double p2 = std::max(x * std::exp(-sh * z - 0.5 * h) - k, 0.0);
        return 0.5 * (p1 + p2);
    };
    return run_blocks(rng.seed(), n_paths, n_workers, per_path);
}

MartingaleCheck martingale_check(double m_exp, const StableIndex& idx, double t,
                                 double b0, long n_paths, Rng& rng) {
    if (!(t > 0.0)) throw std::domain_error("martingale_check: t must be positive");
    if (n_paths < 10000)
        throw std::domain_error("martingale_check: need >= 1e4 paths");
    const double a = idx.alpha;
    auto per_path = [=](Rng& r) {
        if (m_exp == 0.0) return 1.0;
        const double h = t * r.beta(a, 1.0 - a);
        const double z = r.normal();
        return std::exp(m_exp * (b0 + std::sqrt(h) * z) - 0.5 * m_exp * m_exp * h);
    };
    MartingaleCheck out;
    out.batch = run_blocks(rng.seed(), n_paths, 1, per_path);
    out.expected = std::exp(m_exp * b0);
    out.pass = std::fabs(out.batch.estimate - out.expected) <= 4.0 * out.batch.se;
    if (m_exp == 0.0) out.pass = out.batch.estimate == 1.0 && out.batch.se == 0.0;
    return out;
}

CameronMartinCheck cameron_martin_check(const Model& m, double t, double x,
                                        long n_paths, Rng& rng, int path_steps) {
    const double T = m.maturity;
    if (!(t > 0.0) || !(t <= T))
        throw std::domain_error("cameron_martin_check: need 0 < t <= maturity");
    if (n_paths < 100000)
        throw std::domain_error("cameron_martin_check: need >= 1e5 paths");
    const double k = m.strike.k;
    const double x_e0 = std::log(x);

    // Reweighted estimator under the original measure: the joint pair
    // (H(t), H(T)) comes off one simulated subordinator trajectory; the
    // Beta shortcut only gives marginals.
    const StableIndex idx = m.idx;
    auto per_path_a = [=](Rng& r) {
        JointUndershoot h;
        if (t == T) {
            UndershootLaw law(idx, t);
            h.h_t = sample_direct(law, r);
            h.h_T = h.h_t;
        } else {
            h = sample_joint_path(idx, t, T, r, path_steps);
        }
        const double z1 = r.normal();
        const double z2 = r.normal();
        const double xe_t = x_e0 + std::sqrt(h.h_t) * z1;
        const double xe_T = xe_t + std::sqrt(std::max(0.0, h.h_T - h.h_t)) * z2;
        const double weight = std::exp(0.5 * x_e0 - 0.5 * xe_T - h.h_T / 8.0);
        return std::max(std::exp(xe_t) - k, 0.0) * weight;
    };
    PathBatch batch_a = run_blocks(rng.seed(), n_paths, 1, per_path_a);

    Rng rng_b(rng.seed() + 0x9E3779B97F4A7C15ull, 0);
    PathBatch batch_b = mc_price(m, t, x, n_paths, rng_b, false);

    CameronMartinCheck out;
    out.price_reweighted = batch_a.estimate;
    out.se_reweighted = batch_a.se;
    out.price_drift = batch_b.estimate;
    out.se_drift = batch_b.se;
    const double joint_se =
        std::sqrt(batch_a.se * batch_a.se + batch_b.se * batch_b.se);
    out.gap_in_se = std::fabs(batch_a.estimate - batch_b.estimate) / joint_se;
    return out;
}

}  // namespace fracbs
