#pragma once

#include <stdexcept>

#include "swipt/config.hpp"

namespace swipt {

/// Regularized lower incomplete gamma P(a, x): series expansion for
/// x < a + 1, continued fraction for the complement otherwise.
/// Absolute accuracy ~1e-12.
double gamma_cdf_regularized(double shape, double x);

/// CDF of Gamma(shape, scale) at x.
inline double gamma_cdf(double shape, double scale, double x) {
    return x <= 0.0 ? 0.0 : gamma_cdf_regularized(shape, x / scale);
}

/// Density of Gamma(shape, scale) at x > 0.
double gamma_pdf(double shape, double scale, double x);

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_subdivisions = 20'000;
};

struct QuadratureResult {
    double value;
    double error_bound;
};

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Semi-analytical outage probability of the virtual harvest-transmit model:
/// the g1 regions where the block cannot operate (sensitivity gating, first
/// hop below threshold) contribute their gamma mass directly; elsewhere the
/// conditional outage over g2 is the gamma CDF at the mode-dependent
/// threshold, integrated over the g1 density by adaptive quadrature.
/// Throws QuadratureError when the subdivision budget is exhausted.
QuadratureResult outage_virtual_quadrature(const SystemConfig& cfg, const QuadratureSpec& spec);

} // namespace swipt
