#include "linrnn/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace linrnn {

namespace {

// SplitMix64 output function; used only to spread (seed, stream_id) into a
// well-mixed 64-bit engine seed.
std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

SeededSampler SeededSampler::substream(std::uint64_t k) const {
    std::uint64_t state = stream_id;
    const std::uint64_t mixed = splitmix64(state) + k;
    return SeededSampler{seed, mixed};
}

std::mt19937_64 SeededSampler::engine() const {
    std::uint64_t state = seed;
    const std::uint64_t a = splitmix64(state);
    state ^= 0xD1B54A32D192ED03ULL * (stream_id + 1);
    const std::uint64_t b = splitmix64(state);
    return std::mt19937_64(a ^ b);
}

double GaussianDraw::operator()() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // 53-bit mantissas; u1 in (0,1] so the log is finite, u2 in [0,1).
    const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

Eigen::MatrixXd gaussian_matrix(Eigen::Index rows, Eigen::Index cols, double variance,
                                const SeededSampler& sampler) {
    if (rows < 0 || cols < 0) {
        throw std::invalid_argument("gaussian_matrix: negative dimensions");
    }
    Eigen::MatrixXd m(rows, cols);
    if (variance == 0.0) {
        m.setZero();
        return m;
    }
    auto engine = sampler.engine();
    GaussianDraw draw(engine);
    fill_gaussian(m, variance, draw);
    return m;
}

void fill_gaussian(Eigen::MatrixXd& m, double variance, GaussianDraw& draw) {
    if (variance < 0.0) {
        throw std::invalid_argument("fill_gaussian: variance must be nonnegative");
    }
    if (variance == 0.0) {
        m.setZero();
        return;
    }
    const double sd = std::sqrt(variance);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            m(i, j) = sd * draw();
        }
    }
}

}  // namespace linrnn
