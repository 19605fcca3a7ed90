#include "linrnn/conv.hpp"

#include <cmath>
#include <string>

namespace linrnn {

void ConvParams::validate() const {
    detail::require(!theta.empty(), "conv: no filters");
    detail::require(scales.rho.size() == lags(), "conv: scales length must match filter count");
    scales.validate();
    for (std::size_t j = 0; j < theta.size(); ++j) {
        detail::require(theta[j].rows() == theta[0].rows() && theta[j].cols() == theta[0].cols(),
                        "conv: ragged filter shapes at lag " + std::to_string(j));
        detail::require(theta[j].allFinite(), "conv: non-finite filter at lag " + std::to_string(j));
    }
}

ConvParams zero_conv(Eigen::Index T, Eigen::Index n_x, Eigen::Index n_y, ScaleVector scales) {
    detail::require(scales.rho.size() == T, "zero_conv: scales length must equal T");
    ConvParams p;
    p.scales = std::move(scales);
    p.theta.assign(static_cast<std::size_t>(T), Eigen::MatrixXd::Zero(n_y, n_x));
    return p;
}

Sequence conv_forward(const ConvParams& p, const Sequence& x) {
    detail::require(x.channels() == p.in_channels(),
                    "conv_forward: input has " + std::to_string(x.channels()) +
                        " channels, model expects " + std::to_string(p.in_channels()));
    const Eigen::Index T = x.steps();
    detail::require(T <= p.lags(), "conv_forward: input longer than filter support");
    const Eigen::VectorXd sr = p.scales.sqrt_rho();
    Sequence y(T, p.out_channels());
    for (Eigen::Index t = 0; t < T; ++t) {
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(p.out_channels());
        for (Eigen::Index j = 0; j <= t; ++j) {
            acc.noalias() += sr[j] * (p.theta[static_cast<std::size_t>(j)] *
                                      x.data.row(t - j).transpose());
        }
        y.data.row(t) = acc.transpose();
    }
    return y;
}

ImpulseResponse conv_impulse(const ConvParams& p) {
    const Eigen::VectorXd sr = p.scales.sqrt_rho();
    ImpulseResponse ir;
    ir.coeffs.reserve(p.theta.size());
    for (std::size_t j = 0; j < p.theta.size(); ++j) {
        ir.coeffs.push_back(sr[static_cast<Eigen::Index>(j)] * p.theta[j]);
    }
    return ir;
}

ConvParams conv_from_impulse(const ImpulseResponse& L, ScaleVector scales) {
    detail::require(scales.rho.size() == L.lags(),
                    "conv_from_impulse: scales length must match impulse length");
    scales.validate();
    ConvParams p;
    p.scales = std::move(scales);
    const Eigen::VectorXd sr = p.scales.sqrt_rho();
    p.theta.reserve(L.coeffs.size());
    for (std::size_t j = 0; j < L.coeffs.size(); ++j) {
        p.theta.push_back(L.coeffs[j] / sr[static_cast<Eigen::Index>(j)]);
    }
    return p;
}

std::vector<Eigen::MatrixXd> conv_gradients(const ConvParams& p, const Sequence& x,
                                            const Sequence& upstream) {
    detail::require(x.channels() == p.in_channels(), "conv_gradients: input channel mismatch");
    detail::require(upstream.channels() == p.out_channels(),
                    "conv_gradients: upstream channel mismatch");
    detail::require(upstream.steps() == x.steps(), "conv_gradients: horizon mismatch");
    const Eigen::Index T = x.steps();
    const Eigen::VectorXd sr = p.scales.sqrt_rho();
    std::vector<Eigen::MatrixXd> grads(
        p.theta.size(), Eigen::MatrixXd::Zero(p.out_channels(), p.in_channels()));
    for (Eigen::Index j = 0; j < std::min<Eigen::Index>(T, p.lags()); ++j) {
        Eigen::MatrixXd& g = grads[static_cast<std::size_t>(j)];
        for (Eigen::Index t = j; t < T; ++t) {
            g.noalias() += upstream.data.row(t).transpose() * x.data.row(t - j);
        }
        g *= sr[j];
    }
    return grads;
}

std::vector<Eigen::MatrixXd> conv_forward_batch(const ConvParams& p,
                                                const std::vector<Eigen::MatrixXd>& xt) {
    const Eigen::Index T = static_cast<Eigen::Index>(xt.size());
    detail::require(T <= p.lags(), "conv_forward_batch: horizon exceeds filter support");
    const Eigen::Index N = xt.empty() ? 0 : xt[0].cols();
    const Eigen::VectorXd sr = p.scales.sqrt_rho();
    std::vector<Eigen::MatrixXd> yt(static_cast<std::size_t>(T));
    for (Eigen::Index t = 0; t < T; ++t) {
        Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(p.out_channels(), N);
        for (Eigen::Index j = 0; j <= t; ++j) {
            acc.noalias() +=
                sr[j] * (p.theta[static_cast<std::size_t>(j)] * xt[static_cast<std::size_t>(t - j)]);
        }
        yt[static_cast<std::size_t>(t)] = std::move(acc);
    }
    return yt;
}

std::vector<Eigen::MatrixXd> conv_gradients_batch(const ConvParams& p,
                                                  const std::vector<Eigen::MatrixXd>& xt,
                                                  const std::vector<Eigen::MatrixXd>& upstream) {
    detail::require(xt.size() == upstream.size(), "conv_gradients_batch: horizon mismatch");
    const Eigen::Index T = static_cast<Eigen::Index>(xt.size());
    const Eigen::VectorXd sr = p.scales.sqrt_rho();
    std::vector<Eigen::MatrixXd> grads(
        p.theta.size(), Eigen::MatrixXd::Zero(p.out_channels(), p.in_channels()));
    for (Eigen::Index j = 0; j < std::min<Eigen::Index>(T, p.lags()); ++j) {
        Eigen::MatrixXd& g = grads[static_cast<std::size_t>(j)];
        for (Eigen::Index t = j; t < T; ++t) {
            g.noalias() += upstream[static_cast<std::size_t>(t)] *
                           xt[static_cast<std::size_t>(t - j)].transpose();
        }
        g *= sr[j];
    }
    return grads;
}

}  // namespace linrnn
