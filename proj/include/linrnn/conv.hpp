#pragma once

#include <vector>

#include <Eigen/Dense>

#include "linrnn/rnn.hpp"
#include "linrnn/scales.hpp"
#include "linrnn/sequence.hpp"

namespace linrnn {

/// Causal 1D convolutional model y_t = sum_{j<=t} sqrt(rho_j) theta_j x_{t-j}.
/// The effective filter is L_j = sqrt(rho_j) theta_j; the model is linear
/// in theta.
struct ConvParams {
    std::vector<Eigen::MatrixXd> theta;  // T entries, n_y x n_x
    ScaleVector scales;

    [[nodiscard]] Eigen::Index lags() const { return static_cast<Eigen::Index>(theta.size()); }
    [[nodiscard]] Eigen::Index in_channels() const { return theta.empty() ? 0 : theta[0].cols(); }
    [[nodiscard]] Eigen::Index out_channels() const { return theta.empty() ? 0 : theta[0].rows(); }
    [[nodiscard]] Eigen::Index param_count() const {
        return lags() * in_channels() * out_channels();
    }
    void validate() const;
};

/// Zero filters with the given scales.
ConvParams zero_conv(Eigen::Index T, Eigen::Index n_x, Eigen::Index n_y, ScaleVector scales);

Sequence conv_forward(const ConvParams& p, const Sequence& x);

/// L_j = sqrt(rho_j) * theta_j.
ImpulseResponse conv_impulse(const ConvParams& p);

/// Filters realizing a target impulse response under the given scales:
/// theta_j = L_j / sqrt(rho_j).
ConvParams conv_from_impulse(const ImpulseResponse& L, ScaleVector scales);

/// Exact gradients of sum_t <upstream_t, y_t>:
/// dtheta_j = sqrt(rho_j) * sum_{t>=j} upstream_t x_{t-j}^T.
std::vector<Eigen::MatrixXd> conv_gradients(const ConvParams& p, const Sequence& x,
                                            const Sequence& upstream);

/// Batched variants over column-stacked samples (see stack_inputs).
std::vector<Eigen::MatrixXd> conv_forward_batch(const ConvParams& p,
                                                const std::vector<Eigen::MatrixXd>& xt);
std::vector<Eigen::MatrixXd> conv_gradients_batch(const ConvParams& p,
                                                  const std::vector<Eigen::MatrixXd>& xt,
                                                  const std::vector<Eigen::MatrixXd>& upstream);

}  // namespace linrnn
