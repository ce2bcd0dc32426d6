#include "lindley/distribution.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lindley/rng.hpp"
#include "lindley/special_functions.hpp"

namespace lindley {

namespace {

void require_real(double x, const char* what) {
    if (std::isnan(x)) {
        throw std::domain_error(std::string("lindley: ") + what + " is NaN");
    }
}

}  // namespace

LindleyParam::LindleyParam(double theta_value) : theta(theta_value) {
    if (!(theta > 0.0) || !std::isfinite(theta)) {
        throw std::domain_error("LindleyParam: theta must be positive and finite");
    }
}

SumDensityParams::SumDensityParams(unsigned sample_size, double theta_value)
    : n(sample_size), theta(theta_value) {
    if (n < 1) throw std::domain_error("SumDensityParams: n must be >= 1");
    if (!(theta > 0.0) || !std::isfinite(theta)) {
        throw std::domain_error("SumDensityParams: theta must be positive and finite");
    }
}

double pdf(double x, const LindleyParam& p) {
    if (!std::isfinite(x)) {
        throw std::domain_error("lindley::pdf: x must be finite");
    }
    if (x < 0.0) return 0.0;
    const double theta = p.theta;
    return theta * theta / (1.0 + theta) * (1.0 + x) * std::exp(-theta * x);
}

double cdf(double x, const LindleyParam& p) {
    require_real(x, "cdf argument");
    if (x <= 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    const double theta = p.theta;
    const double v = theta * x;
    // 1 - (1 + theta x/(1+theta)) e^(-theta x), grouped so small x keeps
    // its leading digits.
    return -std::expm1(-v) - v / (1.0 + theta) * std::exp(-v);
}

double survival(double x, const LindleyParam& p) {
    require_real(x, "survival argument");
    if (x <= 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    const double theta = p.theta;
    return (1.0 + theta + theta * x) / (1.0 + theta) * std::exp(-theta * x);
}

double log_survival(double x, const LindleyParam& p) {
    require_real(x, "log_survival argument");
    if (x <= 0.0) return 0.0;
    const double theta = p.theta;
    if (std::isinf(x)) return -std::numeric_limits<double>::infinity();
    return std::log1p(theta * x / (1.0 + theta)) - theta * x;
}

double quantile(double q, const LindleyParam& p) {
    if (!(q > 0.0) || !(q < 1.0)) {
        throw std::domain_error("lindley::quantile: q must lie in (0, 1)");
    }
    // Bracket [0, hi] with cdf(hi) > q, then safeguarded Newton.
    double lo = 0.0;
    double hi = 1.0 / p.theta;
    while (cdf(hi, p) < q) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) throw std::runtime_error("lindley::quantile: bracket overflow");
    }
    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        const double err = cdf(x, p) - q;
        if (err > 0.0) {
            hi = x;
        } else {
            lo = x;
        }
        if (std::fabs(err) < 1e-13) break;
        const double dens = pdf(x, p);
        double step_to = (dens > 0.0) ? x - err / dens : 0.5 * (lo + hi);
        if (!(step_to > lo) || !(step_to < hi)) step_to = 0.5 * (lo + hi);
        if (step_to == x) break;
        x = step_to;
    }
    return x;
}

double cdf_dtheta(double x, const LindleyParam& p) {
    require_real(x, "cdf_dtheta argument");
    if (!(x >= 0.0) || std::isinf(x)) {
        throw std::domain_error("lindley::cdf_dtheta: x must be finite and >= 0");
    }
    const double theta = p.theta;
    const double e = std::exp(-theta * x);
    const double one_plus = 1.0 + theta;
    return (x * x * theta + x * theta - 1.0) * e / one_plus +
           (1.0 + theta + theta * x) * e / (one_plus * one_plus);
}

std::vector<double> sample(unsigned n, const LindleyParam& p, std::uint64_t seed) {
    Rng rng(seed);
    return sample(n, p, rng);
}

std::vector<double> sample(unsigned n, const LindleyParam& p, Rng& rng) {
    if (n < 1) throw std::domain_error("lindley::sample: n must be >= 1");
    const double theta = p.theta;
    const double exp_weight = theta / (1.0 + theta);
    std::vector<double> draws(n);
    for (auto& x : draws) {
        if (rng.uniform01() < exp_weight) {
            x = rng.exponential(theta);
        } else {
            x = rng.exponential(theta) + rng.exponential(theta);
        }
    }
    return draws;
}

double sum_pdf(double t, const SumDensityParams& sp) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw std::domain_error("lindley::sum_pdf: t must be positive and finite");
    }
    const double theta = sp.theta;
    const unsigned n = sp.n;
    const double log_theta = std::log(theta);
    const double log_one_plus = std::log1p(theta);
    const double log_t = std::log(t);
    std::vector<double> terms(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        const double shape = 2.0 * n - k;
        const double log_weight = log_binomial(n, k) + k * log_theta - n * log_one_plus;
        terms[k] = log_weight + shape * log_theta + (shape - 1.0) * log_t -
                   theta * t - log_gamma(shape);
    }
    return std::exp(log_sum_exp(terms.data(), terms.size()));
}

double sum_cdf(double t, const SumDensityParams& sp) {
    require_real(t, "sum_cdf argument");
    if (t <= 0.0) return 0.0;
    if (std::isinf(t)) return 1.0;
    const double theta = sp.theta;
    const unsigned n = sp.n;
    const double log_theta = std::log(theta);
    const double log_one_plus = std::log1p(theta);
    double acc = 0.0;
    for (unsigned k = 0; k <= n; ++k) {
        const double weight =
            std::exp(log_binomial(n, k) + k * log_theta - n * log_one_plus);
        acc += weight * gamma_cdf(t, 2.0 * n - k, theta);
    }
    return std::min(acc, 1.0);
}

}  // namespace lindley
