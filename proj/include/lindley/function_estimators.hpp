#pragma once

#include <vector>

#include "lindley/estimators.hpp"

namespace lindley {

/// Plug-in PDF estimate: the Lindley density evaluated at theta_hat.
double plugin_pdf(double x, double theta_hat);

/// Plug-in CDF estimate.
double plugin_cdf(double x, double theta_hat);

/// Cached pieces of the conditional density of X_1 given T = t:
///   f(x | T=t) = (1+x)/A_n(t) * sum_{k=0}^{n-1} C_{k,n} (t-x)^(2n-3-k),
/// with C_{k,n} = C(n-1,k)/Gamma(2n-2-k) and
/// A_n(t) = sum_{j=0}^{n} C(n,j) t^(2n-j-1)/Gamma(2n-j). Everything is kept
/// in log space so n = 100, t = 150 stays finite. Requires n >= 2: at n = 1
/// the exponents go negative and the coefficients hit Gamma of nonpositive
/// integers.
class UmvueContext {
  public:
    UmvueContext(double t, unsigned n);

    double t() const { return t_; }
    unsigned n() const { return n_; }
    double log_normalizer() const { return log_norm_; }

    /// UMVUE of the density: the conditional density above for 0 < x < t,
    /// zero outside.
    double pdf(double x) const;

    /// UMVUE of the CDF: term-by-term incomplete-beta integral of pdf();
    /// exactly 0 for x <= 0 and 1 for x >= t.
    double cdf(double x) const;

  private:
    double t_;
    unsigned n_;
    double log_norm_;
    std::vector<double> log_coeffs_;  // log C_{k,n}, k = 0..n-1
};

double umvue_pdf(double x, const UmvueContext& ctx);
double umvue_cdf(double x, const UmvueContext& ctx);

}  // namespace lindley
