#pragma once

#include <cstddef>

// Self-contained special-function kernel. Everything here is a pure function
// of its arguments and throws std::domain_error on invalid input.

namespace lindley {

/// Natural log of the gamma function for z > 0 (Lanczos approximation,
/// relative error below 1e-12 over [1e-3, 1e6]).
double log_gamma(double z);

/// log of the binomial coefficient C(n, k), computed as a log-gamma
/// difference so that n >= 100 does not overflow.
double log_binomial(unsigned n, unsigned k);

struct BetaArgs {
    double p;      // upper integration limit, in [0, 1]
    double alpha;  // > 0
    double beta;   // > 0
};

/// Regularized incomplete beta function
///   I_p(a, b) = (1/B(a,b)) * Integral_0^p u^(a-1) (1-u)^(b-1) du.
/// Continued-fraction evaluation with the symmetry switch
/// I_p(a,b) = 1 - I_{1-p}(b,a) used for p above a/(a+b).
double reg_inc_beta(const BetaArgs& args);
double reg_inc_beta(double p, double alpha, double beta);

/// Gamma density with shape/rate parameterization:
///   f(t; shape, rate) = rate^shape * t^(shape-1) * exp(-rate*t) / Gamma(shape),
/// for t > 0.
double gamma_pdf(double t, double shape, double rate);

/// Regularized lower incomplete gamma P(shape, rate*t), i.e. the CDF of the
/// gamma distribution above. Series for small arguments, continued fraction
/// for large ones.
double gamma_cdf(double t, double shape, double rate);

/// Upper tail Q = 1 - P, computed without cancellation.
double gamma_sf(double t, double shape, double rate);

/// log(sum_i exp(terms[i])) with max-shifting; -inf terms are allowed.
double log_sum_exp(const double* terms, std::size_t count);

}  // namespace lindley
