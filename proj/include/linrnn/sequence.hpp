#pragma once

#include <vector>

#include <Eigen/Dense>

#include "linrnn/random.hpp"

namespace linrnn {

/// A T-step multichannel signal.  Row t of `data` is the signal at time t.
struct Sequence {
    Eigen::MatrixXd data;  // T x channels

    Sequence() = default;
    explicit Sequence(Eigen::MatrixXd d) : data(std::move(d)) {}
    Sequence(Eigen::Index steps, Eigen::Index channels)
        : data(Eigen::MatrixXd::Zero(steps, channels)) {}

    [[nodiscard]] Eigen::Index steps() const { return data.rows(); }
    [[nodiscard]] Eigen::Index channels() const { return data.cols(); }

    /// Signal at time t as a column vector.
    [[nodiscard]] Eigen::VectorXd at(Eigen::Index t) const { return data.row(t).transpose(); }

    [[nodiscard]] bool all_finite() const { return data.allFinite(); }
};

/// i.i.d. N(0,1) input sequence, the default synthetic input model.
Sequence random_sequence(Eigen::Index steps, Eigen::Index channels, const SeededSampler& sampler);

/// Paired input/target sequences sharing one horizon T.
struct Dataset {
    std::vector<Sequence> inputs;   // each T x n_x
    std::vector<Sequence> targets;  // each T x n_y

    [[nodiscard]] std::size_t size() const { return inputs.size(); }
    [[nodiscard]] Eigen::Index steps() const { return inputs.empty() ? 0 : inputs[0].steps(); }
    [[nodiscard]] Eigen::Index input_channels() const {
        return inputs.empty() ? 0 : inputs[0].channels();
    }
    [[nodiscard]] Eigen::Index target_channels() const {
        return targets.empty() ? 0 : targets[0].channels();
    }

    /// Throws std::invalid_argument on ragged shapes, empty data or
    /// non-finite entries.
    void validate() const;
};

/// The block upper-triangular operator built from one input sequence:
/// block (j, t) holds x_{t-j} for t >= j and zero otherwise, so
/// matrix has T*n_x rows and T columns.
struct ToeplitzOp {
    Sequence source;
    Eigen::MatrixXd matrix;  // (T*n_x) x T
};

ToeplitzOp toeplitz_of(const Sequence& x);

/// Adds i.i.d. Gaussian noise calibrated so the per-entry noise power is
/// signal_power / 10^(snr_db/10), with the signal power taken as the mean
/// squared entry of y over all time steps and channels.  snr_db = +inf
/// returns y unchanged.  Throws on an identically zero signal.
Sequence add_output_noise(const Sequence& y, double snr_db, const SeededSampler& sampler);

namespace detail {
void require(bool cond, const std::string& message);
}

}  // namespace linrnn
