#include "lindley/function_estimators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lindley/distribution.hpp"
#include "lindley/special_functions.hpp"

namespace lindley {

double plugin_pdf(double x, double theta_hat) {
    return pdf(x, LindleyParam(theta_hat));
}

double plugin_cdf(double x, double theta_hat) {
    return cdf(x, LindleyParam(theta_hat));
}

UmvueContext::UmvueContext(double t, unsigned n) : t_(t), n_(n) {
    if (n < 2) throw std::domain_error("UmvueContext: n must be >= 2");
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw std::domain_error("UmvueContext: t must be positive and finite");
    }
    log_coeffs_.resize(n);
    for (unsigned k = 0; k < n; ++k) {
        log_coeffs_[k] = log_binomial(n - 1, k) - log_gamma(2.0 * n - 2.0 - k);
    }
    const double log_t = std::log(t);
    std::vector<double> norm_terms(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        norm_terms[j] =
            log_binomial(n, j) + (2.0 * n - j - 1.0) * log_t - log_gamma(2.0 * n - j);
    }
    log_norm_ = log_sum_exp(norm_terms.data(), norm_terms.size());
}

double UmvueContext::pdf(double x) const {
    if (std::isnan(x)) throw std::domain_error("umvue_pdf: x is NaN");
    if (x <= 0.0 || x >= t_) return 0.0;
    const double log_rem = std::log(t_ - x);
    std::vector<double> terms(n_);
    for (unsigned k = 0; k < n_; ++k) {
        const double exponent = 2.0 * n_ - 3.0 - k;  // >= 0 for n >= 2
        terms[k] = (exponent == 0.0) ? log_coeffs_[k]
                                     : log_coeffs_[k] + exponent * log_rem;
    }
    const double log_sum = log_sum_exp(terms.data(), terms.size());
    return std::exp(std::log1p(x) + log_sum - log_norm_);
}

double UmvueContext::cdf(double x) const {
    if (std::isnan(x)) throw std::domain_error("umvue_cdf: x is NaN");
    if (x <= 0.0) return 0.0;
    if (x >= t_) return 1.0;
    const double ratio = x / t_;
    const double log_t = std::log(t_);
    std::vector<double> terms(n_);
    for (unsigned k = 0; k < n_; ++k) {
        const double m = 2.0 * n_ - 2.0 - k;  // >= 1
        const double bracket = reg_inc_beta(ratio, 1.0, m) / m +
                               t_ * reg_inc_beta(ratio, 2.0, m) / (m * (m + 1.0));
        if (bracket <= 0.0) {
            terms[k] = -std::numeric_limits<double>::infinity();
        } else {
            terms[k] = log_coeffs_[k] + m * log_t + std::log(bracket);
        }
    }
    const double log_sum = log_sum_exp(terms.data(), terms.size());
    return std::min(std::exp(log_sum - log_norm_), 1.0);
}

double umvue_pdf(double x, const UmvueContext& ctx) { return ctx.pdf(x); }

double umvue_cdf(double x, const UmvueContext& ctx) { return ctx.cdf(x); }

}  // namespace lindley
