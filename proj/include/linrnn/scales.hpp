#pragma once

#include <string>

#include <Eigen/Dense>

namespace linrnn {

/// Per-lag weights rho_0..rho_{T-1} of the scaled convolutional
/// parameterization, together with where they came from.
struct ScaleVector {
    enum class Provenance { Analytic, Unit, Custom };

    Eigen::VectorXd rho;
    Provenance provenance = Provenance::Custom;
    // Recorded for Analytic scales only.
    double nu_w = 0.0, nu_f = 0.0, nu_c = 0.0;

    [[nodiscard]] Eigen::Index lags() const { return rho.size(); }
    [[nodiscard]] Eigen::VectorXd sqrt_rho() const { return rho.cwiseSqrt(); }

    /// Positivity plus, for Analytic scales, the closed form and the
    /// geometric-decay envelope.  Throws on violation.
    void validate() const;
};

/// The deterministic NTK weight of lag j for a width-n linear recurrence
/// initialized with variances (nu_w, nu_f, nu_c):
///   rho_j = nu_c * (j * nu_f * nu_w^(j-1) + nu_w^j) + nu_f * nu_w^j,
/// with the j=0 term j*nu_w^(j-1) taken as 0, so rho_0 = nu_c + nu_f.
ScaleVector scale_factors(Eigen::Index T, double nu_w, double nu_f, double nu_c);

/// All-ones scales: the unscaled convolutional model.
ScaleVector unit_scales(Eigen::Index T);

ScaleVector custom_scales(Eigen::VectorXd rho);

/// Envelope constant: rho_j <= rho_max * nu_w^(j-1) for j >= 1.
double rho_max_bound(Eigen::Index T, double nu_f, double nu_c);

std::string to_string(ScaleVector::Provenance p);
ScaleVector::Provenance provenance_from_string(const std::string& s);

}  // namespace linrnn
