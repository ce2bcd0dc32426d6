#pragma once

#include <cstdint>
#include <vector>

// Lindley(theta): density (theta^2/(1+theta)) (1+x) e^(-theta x) on x > 0.
// Equivalently a two-component mixture: Exponential(theta) with weight
// theta/(1+theta) and Gamma(2, theta) with weight 1/(1+theta). The mixture
// view drives both the sampler and the density of the sample sum T.

namespace lindley {

class Rng;

/// The positive rate-like parameter of the Lindley distribution.
struct LindleyParam {
    double theta;

    explicit LindleyParam(double theta_value);
};

/// Sample size / parameter pair for the distribution of T = X_1 + ... + X_n.
struct SumDensityParams {
    unsigned n;
    double theta;

    SumDensityParams(unsigned sample_size, double theta_value);
};

/// Density. Zero for x < 0; throws on non-finite x.
double pdf(double x, const LindleyParam& p);

/// Distribution function: 1 - (1 + theta + theta x) e^(-theta x) / (1 + theta).
/// Zero for x <= 0; NaN is rejected, +/-inf map to the limits 1 and 0.
double cdf(double x, const LindleyParam& p);

/// Survival function 1 - F, computed directly as
/// (1 + theta + theta x) e^(-theta x) / (1 + theta) so large theta*x does not
/// cancel.
double survival(double x, const LindleyParam& p);

/// log survival, exact for any theta*x (no underflow).
double log_survival(double x, const LindleyParam& p);

/// Inverse CDF on (0, 1), via bracketed Newton/bisection;
/// cdf(quantile(q)) = q to 1e-10.
double quantile(double q, const LindleyParam& p);

/// Partial derivative of the CDF with respect to theta:
///   Delta(x | theta) = (x^2 theta + x theta - 1) e^(-theta x) / (1 + theta)
///                    + (1 + theta + theta x) e^(-theta x) / (1 + theta)^2.
double cdf_dtheta(double x, const LindleyParam& p);

/// n independent draws, deterministic for a fixed seed. Uses the exact
/// mixture construction: Exponential(theta) with probability theta/(1+theta),
/// otherwise the sum of two Exponential(theta) draws.
std::vector<double> sample(unsigned n, const LindleyParam& p, std::uint64_t seed);

/// Draws from an existing generator (the simulation harness owns substreams).
std::vector<double> sample(unsigned n, const LindleyParam& p, Rng& rng);

/// Density of T = X_1 + ... + X_n at t > 0: the binomial-weighted mixture
///   f(t; n, theta) = sum_{k=0}^{n} p_{k,n} f_GA(t; 2n - k, theta),
/// with p_{k,n} = C(n,k) theta^k / (1+theta)^n. Evaluated in log space.
double sum_pdf(double t, const SumDensityParams& sp);

/// CDF of T, as the same mixture of regularized incomplete gammas.
double sum_cdf(double t, const SumDensityParams& sp);

}  // namespace lindley
