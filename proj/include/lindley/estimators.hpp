#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lindley/optimize.hpp"
#include "lindley/sample.hpp"

namespace lindley {

enum class EstimatorKind { Mle, Umvue, Pce, Lse, Wlse, Cvme, Ade };

const char* to_string(EstimatorKind kind);
std::optional<EstimatorKind> estimator_from_string(const std::string& name);

/// All seven kinds, in canonical (tie-breaking) order.
const std::vector<EstimatorKind>& all_estimator_kinds();

struct ThetaEstimate {
    double theta_hat;
    EstimatorKind method;
    std::optional<double> objective_value;  // absent for the closed-form MLE
    int evaluations = 0;
    bool converged = true;
};

/// Closed-form MLE: with xbar = t/n,
///   theta = (-(xbar-1) + sqrt((xbar-1)^2 + 8 xbar)) / (2 xbar),
/// evaluated through g_of_t so the two share one arithmetic path.
ThetaEstimate mle(const Sample& s);

/// The MLE as a function of the sufficient statistic t = sum(x_i):
///   g(t) = (-(t-n) + sqrt((t-n)^2 + 8tn)) / (2t).
double g_of_t(double t, unsigned n);

/// Plotting positions p_i = i/(n+1), i = 1..n.
std::vector<double> plotting_positions(unsigned n);

/// Weighted least squares weights w_j = (n+1)^2 (n+2) / (j (n-j+1)).
std::vector<double> wls_weights(unsigned n);

/// Least squares: minimize sum_j (F(x_{j:n}; theta) - j/(n+1))^2.
ThetaEstimate lse(const Sample& s);

/// Weighted least squares: the same residuals, weighted by w_j.
ThetaEstimate wlse(const Sample& s);

/// Percentile residuals. LogSurvival matches log(1 - p_i) against
/// log(1 - F(x_{i:n}; theta)); PaperText keeps the sign of the theta*x term
/// as printed in the source derivation (which flips it).
enum class PceVariant { LogSurvival, PaperText };

ThetaEstimate pce(const Sample& s, PceVariant variant = PceVariant::LogSurvival);

/// Cramer-von Mises: minimize 1/(12n) + sum_i (F(x_{i:n}) - (2i-1)/(2n))^2.
ThetaEstimate cvme(const Sample& s);

/// Anderson-Darling: minimize
///   -n - (1/n) sum_i (2i-1) [log F(x_{i:n}) + log (1 - F(x_{n+1-i:n}))].
ThetaEstimate ade(const Sample& s);

/// Dispatch by kind; throws std::domain_error for Umvue, which estimates the
/// curves rather than theta (see function_estimators.hpp).
ThetaEstimate fit(const Sample& s, EstimatorKind kind);

/// The default optimization bracket for theta and the fallback used when the
/// minimizer lands on an endpoint.
Bracket default_theta_bracket();
Bracket expanded_theta_bracket();

}  // namespace lindley
