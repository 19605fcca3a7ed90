#include "linrnn/rnn.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace linrnn {

Eigen::VectorXd ImpulseResponse::lag_norms() const {
    Eigen::VectorXd norms(lags());
    for (Eigen::Index j = 0; j < lags(); ++j) {
        norms[j] = coeffs[static_cast<std::size_t>(j)].norm();
    }
    return norms;
}

void RnnParams::validate() const {
    detail::require(W.rows() == W.cols(), "rnn: W must be square");
    detail::require(F.rows() == W.rows(), "rnn: F row count must equal n");
    detail::require(C.cols() == W.rows(), "rnn: C column count must equal n");
    detail::require(W.allFinite() && F.allFinite() && C.allFinite(), "rnn: non-finite parameters");
}

RnnParams init_rnn(Eigen::Index n, Eigen::Index n_x, Eigen::Index n_y, double nu_w, double nu_f,
                   double nu_c, const SeededSampler& sampler) {
    detail::require(n >= 1 && n_x >= 1 && n_y >= 1, "init_rnn: dimensions must be >= 1");
    detail::require(nu_w >= 0.0 && nu_f >= 0.0 && nu_c >= 0.0,
                    "init_rnn: variances must be nonnegative");
    RnnParams p;
    p.nu_w = nu_w;
    p.nu_f = nu_f;
    p.nu_c = nu_c;
    p.W.resize(n, n);
    p.F.resize(n, n_x);
    p.C.resize(n_y, n);
    auto engine = sampler.engine();
    GaussianDraw draw(engine);
    fill_gaussian(p.W, nu_w, draw);
    fill_gaussian(p.F, nu_f, draw);
    fill_gaussian(p.C, nu_c, draw);
    return p;
}

Sequence rnn_forward(const RnnParams& p, const Sequence& x) {
    return rnn_forward_states(p, x).output;
}

RnnStates rnn_forward_states(const RnnParams& p, const Sequence& x) {
    detail::require(x.channels() == p.in_channels(),
                    "rnn_forward: input has " + std::to_string(x.channels()) +
                        " channels, model expects " + std::to_string(p.in_channels()));
    const Eigen::Index T = x.steps();
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(p.n()));
    RnnStates s;
    s.hidden.resize(p.n(), T);
    s.output = Sequence(T, p.out_channels());
    Eigen::VectorXd h = Eigen::VectorXd::Zero(p.n());
    for (Eigen::Index t = 0; t < T; ++t) {
        h = inv_sqrt_n * (p.W * h) + p.F * x.data.row(t).transpose();
        s.hidden.col(t) = h;
        s.output.data.row(t) = (inv_sqrt_n * (p.C * h)).transpose();
    }
    return s;
}

ImpulseResponse rnn_impulse(const RnnParams& p, Eigen::Index T) {
    detail::require(T >= 1, "rnn_impulse: T must be >= 1");
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(p.n()));
    ImpulseResponse ir;
    ir.coeffs.reserve(static_cast<std::size_t>(T));
    Eigen::MatrixXd q = p.F;  // q_j = n^{-j/2} W^j F
    for (Eigen::Index j = 0; j < T; ++j) {
        if (j > 0) {
            q = inv_sqrt_n * (p.W * q);
        }
        ir.coeffs.push_back(inv_sqrt_n * (p.C * q));
    }
    return ir;
}

RnnGradients rnn_gradients(const RnnParams& p, const Sequence& x, const Sequence& upstream) {
    detail::require(x.channels() == p.in_channels(), "rnn_gradients: input channel mismatch");
    detail::require(upstream.channels() == p.out_channels(),
                    "rnn_gradients: upstream channel mismatch");
    detail::require(upstream.steps() == x.steps(), "rnn_gradients: horizon mismatch");
    const Eigen::Index T = x.steps();
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(p.n()));
    const Eigen::MatrixXd& H = rnn_forward_states(p, x).hidden;

    RnnGradients g;
    g.dW = Eigen::MatrixXd::Zero(p.n(), p.n());
    g.dF = Eigen::MatrixXd::Zero(p.n(), p.in_channels());
    g.dC = Eigen::MatrixXd::Zero(p.out_channels(), p.n());

    // g_t = dLoss/dh_t, accumulated backward.
    Eigen::VectorXd gh = Eigen::VectorXd::Zero(p.n());
    for (Eigen::Index t = T - 1; t >= 0; --t) {
        const Eigen::VectorXd u = upstream.data.row(t).transpose();
        g.dC += inv_sqrt_n * (u * H.col(t).transpose());
        gh = inv_sqrt_n * (p.C.transpose() * u) + inv_sqrt_n * (p.W.transpose() * gh);
        if (t > 0) {
            g.dW += inv_sqrt_n * (gh * H.col(t - 1).transpose());
        }
        g.dF += gh * x.data.row(t).transpose();
    }
    return g;
}

std::vector<Eigen::MatrixXd> stack_inputs(const std::vector<Sequence>& inputs) {
    detail::require(!inputs.empty(), "stack_inputs: empty");
    const Eigen::Index T = inputs[0].steps();
    const Eigen::Index nx = inputs[0].channels();
    const Eigen::Index N = static_cast<Eigen::Index>(inputs.size());
    std::vector<Eigen::MatrixXd> xt(static_cast<std::size_t>(T));
    for (Eigen::Index t = 0; t < T; ++t) {
        xt[static_cast<std::size_t>(t)].resize(nx, N);
    }
    for (Eigen::Index i = 0; i < N; ++i) {
        const Sequence& s = inputs[static_cast<std::size_t>(i)];
        detail::require(s.steps() == T && s.channels() == nx, "stack_inputs: ragged shapes");
        for (Eigen::Index t = 0; t < T; ++t) {
            xt[static_cast<std::size_t>(t)].col(i) = s.data.row(t).transpose();
        }
    }
    return xt;
}

RnnBatchStates rnn_forward_batch(const RnnParams& p, const std::vector<Eigen::MatrixXd>& xt) {
    detail::require(!xt.empty(), "rnn_forward_batch: empty horizon");
    detail::require(xt[0].rows() == p.in_channels(), "rnn_forward_batch: channel mismatch");
    const std::size_t T = xt.size();
    const Eigen::Index N = xt[0].cols();
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(p.n()));
    RnnBatchStates s;
    s.hidden.resize(T);
    s.outputs.resize(T);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(p.n(), N);
    for (std::size_t t = 0; t < T; ++t) {
        h = inv_sqrt_n * (p.W * h) + p.F * xt[t];
        s.hidden[t] = h;
        s.outputs[t] = inv_sqrt_n * (p.C * h);
    }
    return s;
}

RnnGradients rnn_gradients_batch(const RnnParams& p, const std::vector<Eigen::MatrixXd>& xt,
                                 const std::vector<Eigen::MatrixXd>& upstream,
                                 const RnnBatchStates& states) {
    detail::require(xt.size() == upstream.size() && xt.size() == states.hidden.size(),
                    "rnn_gradients_batch: horizon mismatch");
    const std::size_t T = xt.size();
    const Eigen::Index N = xt[0].cols();
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(p.n()));

    RnnGradients g;
    g.dW = Eigen::MatrixXd::Zero(p.n(), p.n());
    g.dF = Eigen::MatrixXd::Zero(p.n(), p.in_channels());
    g.dC = Eigen::MatrixXd::Zero(p.out_channels(), p.n());

    Eigen::MatrixXd gh = Eigen::MatrixXd::Zero(p.n(), N);
    for (std::size_t ti = T; ti-- > 0;) {
        g.dC.noalias() += inv_sqrt_n * (upstream[ti] * states.hidden[ti].transpose());
        gh = inv_sqrt_n * (p.C.transpose() * upstream[ti]) +
             inv_sqrt_n * (p.W.transpose() * gh);
        if (ti > 0) {
            g.dW.noalias() += inv_sqrt_n * (gh * states.hidden[ti - 1].transpose());
        }
        g.dF.noalias() += gh * xt[ti].transpose();
    }
    return g;
}

SpectralRadiusEstimate spectral_radius(const RnnParams& p, int max_arnoldi, double tol) {
    const Eigen::Index n = p.n();
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    SpectralRadiusEstimate est;

    // Spectral-norm upper bound: power iteration on W^T W.
    {
        auto engine = SeededSampler{0x5eedbeefULL, 17}.engine();
        GaussianDraw draw(engine);
        Eigen::VectorXd v(n);
        for (Eigen::Index i = 0; i < n; ++i) v[i] = draw();
        double norm = v.norm();
        if (norm == 0.0) v[0] = 1.0;
        v.normalize();
        double sigma2 = 0.0;
        for (int it = 0; it < 200; ++it) {
            Eigen::VectorXd w = p.W.transpose() * (p.W * v);
            const double next = w.norm();
            if (next == 0.0) {
                sigma2 = 0.0;
                break;
            }
            v = w / next;
            if (std::abs(next - sigma2) <= tol * std::max(1.0, next)) {
                sigma2 = next;
                break;
            }
            sigma2 = next;
        }
        est.norm_bound = std::sqrt(sigma2) * inv_sqrt_n;
    }

    // Arnoldi projection of W; Ritz values of the Hessenberg matrix
    // approximate the outer spectrum, including complex pairs.
    const int m = static_cast<int>(std::min<Eigen::Index>(n, max_arnoldi));
    Eigen::MatrixXd V(n, m + 1);
    Eigen::MatrixXd Hm = Eigen::MatrixXd::Zero(m + 1, m);
    {
        auto engine = SeededSampler{0x5eedbeefULL, 18}.engine();
        GaussianDraw draw(engine);
        Eigen::VectorXd v0(n);
        for (Eigen::Index i = 0; i < n; ++i) v0[i] = draw();
        V.col(0) = v0.normalized();
    }
    int steps = 0;
    for (int k = 0; k < m; ++k) {
        Eigen::VectorXd w = p.W * V.col(k);
        for (int i = 0; i <= k; ++i) {
            Hm(i, k) = V.col(i).dot(w);
            w -= Hm(i, k) * V.col(i);
        }
        // one reorthogonalization pass keeps the basis clean
        for (int i = 0; i <= k; ++i) {
            const double c = V.col(i).dot(w);
            Hm(i, k) += c;
            w -= c * V.col(i);
        }
        const double beta = w.norm();
        Hm(k + 1, k) = beta;
        steps = k + 1;
        if (beta <= tol * std::max(1.0, est.norm_bound * std::sqrt(static_cast<double>(n)))) {
            break;  // invariant subspace found; Ritz values are exact
        }
        V.col(k + 1) = w / beta;
    }
    est.iterations = steps;
    Eigen::MatrixXd Hk = Hm.topLeftCorner(steps, steps);
    Eigen::EigenSolver<Eigen::MatrixXd> eig(Hk, /*computeEigenvectors=*/false);
    if (eig.info() != Eigen::Success) {
        est.converged = false;
        throw std::runtime_error("spectral_radius: eigenvalue iteration failed to converge");
    }
    const double radius = eig.eigenvalues().cwiseAbs().maxCoeff();
    est.value = radius * inv_sqrt_n;
    if (est.value > est.norm_bound + 1e-8) {
        est.converged = false;
    }
    return est;
}

}  // namespace linrnn
