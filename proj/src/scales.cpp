#include "linrnn/scales.hpp"

#include <cmath>
#include <stdexcept>

#include "linrnn/sequence.hpp"

namespace linrnn {

void ScaleVector::validate() const {
    detail::require(rho.size() >= 1, "scales: empty");
    detail::require((rho.array() > 0.0).all(), "scales: rho must be strictly positive");
    if (provenance == Provenance::Analytic) {
        const ScaleVector ref = scale_factors(rho.size(), nu_w, nu_f, nu_c);
        detail::require((rho - ref.rho).cwiseAbs().maxCoeff() == 0.0,
                        "scales: analytic values do not match the closed form");
        const double rmax = rho_max_bound(rho.size(), nu_f, nu_c);
        for (Eigen::Index j = 1; j < rho.size(); ++j) {
            detail::require(rho[j] <= rmax * std::pow(nu_w, static_cast<double>(j - 1)) + 1e-15,
                            "scales: decay envelope violated at lag " + std::to_string(j));
        }
    }
}

ScaleVector scale_factors(Eigen::Index T, double nu_w, double nu_f, double nu_c) {
    detail::require(T >= 1, "scale_factors: T must be >= 1");
    detail::require(nu_w > 0.0 && nu_f > 0.0 && nu_c > 0.0,
                    "scale_factors: variances must be positive");
    ScaleVector s;
    s.provenance = ScaleVector::Provenance::Analytic;
    s.nu_w = nu_w;
    s.nu_f = nu_f;
    s.nu_c = nu_c;
    s.rho.resize(T);
    for (Eigen::Index j = 0; j < T; ++j) {
        const double wj = std::pow(nu_w, static_cast<double>(j));
        const double wjm1 = j == 0 ? 0.0 : std::pow(nu_w, static_cast<double>(j - 1));
        s.rho[j] = nu_c * (static_cast<double>(j) * nu_f * wjm1 + wj) + nu_f * wj;
    }
    return s;
}

ScaleVector unit_scales(Eigen::Index T) {
    detail::require(T >= 1, "unit_scales: T must be >= 1");
    ScaleVector s;
    s.provenance = ScaleVector::Provenance::Unit;
    s.rho = Eigen::VectorXd::Ones(T);
    return s;
}

ScaleVector custom_scales(Eigen::VectorXd rho) {
    ScaleVector s;
    s.provenance = ScaleVector::Provenance::Custom;
    s.rho = std::move(rho);
    s.validate();
    return s;
}

double rho_max_bound(Eigen::Index T, double nu_f, double nu_c) {
    return nu_c * (static_cast<double>(T) * nu_f + 1.0) + nu_f;
}

std::string to_string(ScaleVector::Provenance p) {
    switch (p) {
        case ScaleVector::Provenance::Analytic: return "analytic";
        case ScaleVector::Provenance::Unit: return "unit";
        case ScaleVector::Provenance::Custom: return "custom";
    }
    return "custom";
}

ScaleVector::Provenance provenance_from_string(const std::string& s) {
    if (s == "analytic") return ScaleVector::Provenance::Analytic;
    if (s == "unit") return ScaleVector::Provenance::Unit;
    if (s == "custom") return ScaleVector::Provenance::Custom;
    throw std::invalid_argument("unknown scale provenance: " + s);
}

}  // namespace linrnn
