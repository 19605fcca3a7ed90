#pragma once

#include <vector>

#include <Eigen/Dense>

#include "linrnn/random.hpp"
#include "linrnn/sequence.hpp"

namespace linrnn {

/// Impulse response coefficients L_0..L_{T-1}, each n_y x n_x.  L_j maps
/// the input at lag j to the current output; both model families share
/// this coordinate system.
struct ImpulseResponse {
    std::vector<Eigen::MatrixXd> coeffs;

    [[nodiscard]] Eigen::Index lags() const { return static_cast<Eigen::Index>(coeffs.size()); }
    [[nodiscard]] Eigen::Index out_channels() const {
        return coeffs.empty() ? 0 : coeffs[0].rows();
    }
    [[nodiscard]] Eigen::Index in_channels() const {
        return coeffs.empty() ? 0 : coeffs[0].cols();
    }
    /// Frobenius norm per lag.
    [[nodiscard]] Eigen::VectorXd lag_norms() const;
};

/// Parameters of the linear recurrence
///   h_t = (1/sqrt(n)) W h_{t-1} + F x_t,  y_t = (1/sqrt(n)) C h_t,
/// with h_{-1} = 0.
struct RnnParams {
    Eigen::MatrixXd W;  // n x n
    Eigen::MatrixXd F;  // n x n_x
    Eigen::MatrixXd C;  // n_y x n
    double nu_w = 0.0, nu_f = 0.0, nu_c = 0.0;  // init variances, recorded

    [[nodiscard]] Eigen::Index n() const { return W.rows(); }
    [[nodiscard]] Eigen::Index in_channels() const { return F.cols(); }
    [[nodiscard]] Eigen::Index out_channels() const { return C.rows(); }
    [[nodiscard]] Eigen::Index param_count() const {
        return W.size() + F.size() + C.size();
    }
    void validate() const;
};

/// i.i.d. Gaussian initialization: W_ij ~ N(0,nu_w), F_ij ~ N(0,nu_f),
/// C_ki ~ N(0,nu_c), all independent.  Draw order is W, then F, then C,
/// each filled row by row from the sampler's stream.
RnnParams init_rnn(Eigen::Index n, Eigen::Index n_x, Eigen::Index n_y, double nu_w, double nu_f,
                   double nu_c, const SeededSampler& sampler);

Sequence rnn_forward(const RnnParams& p, const Sequence& x);

/// Forward pass that also returns the hidden trajectory (column t = h_t),
/// reused by the backward pass.
struct RnnStates {
    Sequence output;
    Eigen::MatrixXd hidden;  // n x T
};
RnnStates rnn_forward_states(const RnnParams& p, const Sequence& x);

/// L_j = n^{-(j+1)/2} C W^j F, computed by the running product
/// q_{j+1} = (1/sqrt(n)) W q_j with q_0 = F (never an explicit power).
ImpulseResponse rnn_impulse(const RnnParams& p, Eigen::Index T);

struct RnnGradients {
    Eigen::MatrixXd dW, dF, dC;
};

/// Exact gradients of sum_t <upstream_t, y_t> with respect to (W, F, C),
/// by backward recursion through the hidden states.
RnnGradients rnn_gradients(const RnnParams& p, const Sequence& x, const Sequence& upstream);

/// --- batched variants -----------------------------------------------------
/// Samples are stacked as columns so every time step is one GEMM; used by
/// the trainer where per-sample loops would be memory-bound.

/// inputs[i] must share T and n_x; returns X_t blocks (n_x x N).
std::vector<Eigen::MatrixXd> stack_inputs(const std::vector<Sequence>& inputs);

struct RnnBatchStates {
    std::vector<Eigen::MatrixXd> outputs;  // T entries, n_y x N
    std::vector<Eigen::MatrixXd> hidden;   // T entries, n x N
};
RnnBatchStates rnn_forward_batch(const RnnParams& p, const std::vector<Eigen::MatrixXd>& xt);

/// upstream[t] is n_y x N; gradient of sum over samples and time of
/// <upstream_t, y_t>.
RnnGradients rnn_gradients_batch(const RnnParams& p, const std::vector<Eigen::MatrixXd>& xt,
                                 const std::vector<Eigen::MatrixXd>& upstream,
                                 const RnnBatchStates& states);

/// --- diagnostics -----------------------------------------------------------

struct SpectralRadiusEstimate {
    double value = 0.0;       // (1/sqrt(n)) * max |eigenvalue of W|
    double norm_bound = 0.0;  // (1/sqrt(n)) * ||W||_2, always >= value
    bool converged = true;
    int iterations = 0;
};

/// Stability diagnostic.  The spectral norm comes from power iteration on
/// W^T W; the eigenvalue refinement is an Arnoldi projection of W whose
/// Ritz values capture the dominant (possibly complex) spectrum.
SpectralRadiusEstimate spectral_radius(const RnnParams& p, int max_arnoldi = 120,
                                       double tol = 1e-9);

}  // namespace linrnn
