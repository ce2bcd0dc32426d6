#pragma once

#include <functional>
#include <vector>

namespace lindley {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_intervals = 4000;
};

struct QuadratureResult {
    double value;
    double error_estimate;
    int evaluations;
    bool converged;
};

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b]. The worst
/// interval by error estimate is bisected until the accumulated estimate
/// meets max(abs_tol, rel_tol * |value|) or the interval budget runs out.
/// `breakpoints` become panel boundaries (integrand kinks go here).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {},
                           const std::vector<double>& breakpoints = {});

}  // namespace lindley
