#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace linrnn {

/// Identifies one reproducible random stream.  Equal (seed, stream_id)
/// pairs reproduce draws bit-for-bit on a given platform; distinct
/// stream_ids give statistically independent streams of the same seed.
struct SeededSampler {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;

    /// Derived sampler for an independent sub-stream (Monte Carlo trials,
    /// parallel workers).
    [[nodiscard]] SeededSampler substream(std::uint64_t k) const;

    /// Fresh engine positioned at the start of this stream.
    [[nodiscard]] std::mt19937_64 engine() const;
};

/// Draws from N(0, 1) using the engine's raw 64-bit output and Box-Muller.
/// std::normal_distribution is implementation-defined, so we roll the
/// transform ourselves to keep streams reproducible across toolchains.
class GaussianDraw {
  public:
    explicit GaussianDraw(std::mt19937_64& engine) : engine_(engine) {}

    double operator()();

  private:
    std::mt19937_64& engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// rows x cols matrix of i.i.d. N(0, variance) entries, filled row by row.
/// variance == 0 returns an exact zero matrix without consuming draws.
Eigen::MatrixXd gaussian_matrix(Eigen::Index rows, Eigen::Index cols, double variance,
                                const SeededSampler& sampler);

/// In-place variant drawing from an already-running engine; used when one
/// operation draws several matrices in a documented order.
void fill_gaussian(Eigen::MatrixXd& m, double variance, GaussianDraw& draw);

}  // namespace linrnn
