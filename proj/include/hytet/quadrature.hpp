#pragma once

#include <cstddef>
#include <functional>

namespace hytet {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_levels = 12;
};

/// Throws DomainError unless both tolerances are positive and
/// max_levels >= 3.
void validate(const QuadratureConfig& cfg);

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    std::size_t levels = 0;
};

/// Tanh-sinh (double-exponential) quadrature of f over [a, b]. The
/// integrand is never evaluated at the endpoints. Stops once the error
/// estimate is below max(abs_tol, rel_tol * L1 norm) or max_levels is hit.
QuadratureResult integrate_tanh_sinh(const std::function<double(double)>& f,
                                     double a, double b,
                                     const QuadratureConfig& cfg);

}  // namespace hytet
