#include "linrnn/sequence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace linrnn {

namespace detail {

void require(bool cond, const std::string& message) {
    if (!cond) {
        throw std::invalid_argument(message);
    }
}

}  // namespace detail

Sequence random_sequence(Eigen::Index steps, Eigen::Index channels,
                         const SeededSampler& sampler) {
    return Sequence(gaussian_matrix(steps, channels, 1.0, sampler));
}

void Dataset::validate() const {
    detail::require(!inputs.empty(), "dataset: no samples");
    detail::require(inputs.size() == targets.size(),
                    "dataset: " + std::to_string(inputs.size()) + " inputs vs " +
                        std::to_string(targets.size()) + " targets");
    const Eigen::Index T = inputs[0].steps();
    const Eigen::Index nx = inputs[0].channels();
    const Eigen::Index ny = targets[0].channels();
    detail::require(T >= 1 && nx >= 1 && ny >= 1, "dataset: degenerate shapes");
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const std::string tag = "dataset sample " + std::to_string(i);
        detail::require(inputs[i].steps() == T && targets[i].steps() == T,
                        tag + ": horizon mismatch");
        detail::require(inputs[i].channels() == nx, tag + ": input channel mismatch");
        detail::require(targets[i].channels() == ny, tag + ": target channel mismatch");
        detail::require(inputs[i].all_finite() && targets[i].all_finite(),
                        tag + ": non-finite entries");
    }
}

ToeplitzOp toeplitz_of(const Sequence& x) {
    detail::require(x.all_finite(), "toeplitz_of: non-finite input");
    const Eigen::Index T = x.steps();
    const Eigen::Index nx = x.channels();
    ToeplitzOp op;
    op.source = x;
    op.matrix = Eigen::MatrixXd::Zero(T * nx, T);
    for (Eigen::Index j = 0; j < T; ++j) {
        for (Eigen::Index t = j; t < T; ++t) {
            op.matrix.block(j * nx, t, nx, 1) = x.data.row(t - j).transpose();
        }
    }
    return op;
}

Sequence add_output_noise(const Sequence& y, double snr_db, const SeededSampler& sampler) {
    if (std::isinf(snr_db) && snr_db > 0) {
        return y;
    }
    const double signal_power = y.data.squaredNorm() / static_cast<double>(y.data.size());
    detail::require(signal_power > 0.0, "add_output_noise: SNR undefined for all-zero signal");
    const double noise_var = signal_power / std::pow(10.0, snr_db / 10.0);
    Sequence out = y;
    out.data += gaussian_matrix(y.steps(), y.channels(), noise_var, sampler);
    return out;
}

}  // namespace linrnn
