#include "lindley/estimators.hpp"

#include <cmath>
#include <stdexcept>

#include "lindley/distribution.hpp"

namespace lindley {

namespace {

ThetaEstimate minimize_objective(const std::function<double(double)>& objective,
                                 EstimatorKind kind) {
    Bracket bracket = default_theta_bracket();
    MinimizeResult r = minimize_scalar(objective, bracket);
    int evaluations = r.evaluations;
    // One-time expansion when the minimizer lands on an endpoint; the source
    // problem never bounds theta.
    if (r.argmin - bracket.lo <= bracket.tol || bracket.hi - r.argmin <= bracket.tol) {
        Bracket wide = expanded_theta_bracket();
        r = minimize_scalar(objective, wide);
        evaluations += r.evaluations;
    }
    return ThetaEstimate{r.argmin, kind, r.min_value, evaluations, true};
}

void require_at_least(const Sample& s, unsigned min_n, const char* name) {
    if (s.size() < min_n) {
        throw std::domain_error(std::string(name) + ": needs a sample of size >= " +
                                std::to_string(min_n));
    }
}

}  // namespace

const char* to_string(EstimatorKind kind) {
    switch (kind) {
        case EstimatorKind::Mle: return "mle";
        case EstimatorKind::Umvue: return "umvue";
        case EstimatorKind::Pce: return "pce";
        case EstimatorKind::Lse: return "lse";
        case EstimatorKind::Wlse: return "wlse";
        case EstimatorKind::Cvme: return "cvme";
        case EstimatorKind::Ade: return "ade";
    }
    return "?";
}

std::optional<EstimatorKind> estimator_from_string(const std::string& name) {
    for (EstimatorKind kind : all_estimator_kinds()) {
        if (name == to_string(kind)) return kind;
    }
    return std::nullopt;
}

const std::vector<EstimatorKind>& all_estimator_kinds() {
    static const std::vector<EstimatorKind> kinds{
        EstimatorKind::Mle,  EstimatorKind::Umvue, EstimatorKind::Pce,
        EstimatorKind::Lse,  EstimatorKind::Wlse,  EstimatorKind::Cvme,
        EstimatorKind::Ade};
    return kinds;
}

Bracket default_theta_bracket() { return Bracket(1e-6, 100.0, 1e-8); }
Bracket expanded_theta_bracket() { return Bracket(1e-9, 1e4, 1e-8); }

double g_of_t(double t, unsigned n) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw std::domain_error("g_of_t: t must be positive and finite");
    }
    if (n < 1) throw std::domain_error("g_of_t: n must be >= 1");
    const double nd = static_cast<double>(n);
    const double diff = t - nd;
    return (-diff + std::sqrt(diff * diff + 8.0 * t * nd)) / (2.0 * t);
}

ThetaEstimate mle(const Sample& s) {
    return ThetaEstimate{g_of_t(s.sum(), s.size()), EstimatorKind::Mle,
                         std::nullopt, 0, true};
}

std::vector<double> plotting_positions(unsigned n) {
    std::vector<double> p(n);
    for (unsigned i = 1; i <= n; ++i) {
        p[i - 1] = static_cast<double>(i) / (n + 1.0);
    }
    return p;
}

std::vector<double> wls_weights(unsigned n) {
    std::vector<double> w(n);
    const double scale = (n + 1.0) * (n + 1.0) * (n + 2.0);
    for (unsigned j = 1; j <= n; ++j) {
        w[j - 1] = scale / (static_cast<double>(j) * (n - j + 1.0));
    }
    return w;
}

ThetaEstimate lse(const Sample& s) {
    require_at_least(s, 2, "lse");
    const auto& x = s.sorted();
    const auto p = plotting_positions(s.size());
    auto objective = [&](double theta) {
        const LindleyParam param(theta);
        double acc = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            const double r = cdf(x[j], param) - p[j];
            acc += r * r;
        }
        return acc;
    };
    return minimize_objective(objective, EstimatorKind::Lse);
}

ThetaEstimate wlse(const Sample& s) {
    require_at_least(s, 2, "wlse");
    const auto& x = s.sorted();
    const auto p = plotting_positions(s.size());
    const auto w = wls_weights(s.size());
    auto objective = [&](double theta) {
        const LindleyParam param(theta);
        double acc = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            const double r = cdf(x[j], param) - p[j];
            acc += w[j] * r * r;
        }
        return acc;
    };
    return minimize_objective(objective, EstimatorKind::Wlse);
}

ThetaEstimate pce(const Sample& s, PceVariant variant) {
    require_at_least(s, 2, "pce");
    const auto& x = s.sorted();
    const auto p = plotting_positions(s.size());
    auto objective = [&, variant](double theta) {
        const LindleyParam param(theta);
        double acc = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            double r;
            if (variant == PceVariant::LogSurvival) {
                r = std::log1p(-p[i]) - log_survival(x[i], param);
            } else {
                // Literal printed objective; note log(1-F) = log((1+theta+
                // theta x)/(1+theta)) - theta x, so this flips the last sign.
                r = std::log1p(-p[i]) -
                    (std::log1p(theta * x[i] / (1.0 + theta))) - theta * x[i];
            }
            acc += r * r;
        }
        return acc;
    };
    return minimize_objective(objective, EstimatorKind::Pce);
}

ThetaEstimate cvme(const Sample& s) {
    require_at_least(s, 1, "cvme");
    const auto& x = s.sorted();
    const double n = static_cast<double>(s.size());
    auto objective = [&](double theta) {
        const LindleyParam param(theta);
        double acc = 1.0 / (12.0 * n);
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double r = cdf(x[i], param) - (2.0 * (i + 1) - 1.0) / (2.0 * n);
            acc += r * r;
        }
        return acc;
    };
    return minimize_objective(objective, EstimatorKind::Cvme);
}

ThetaEstimate ade(const Sample& s) {
    require_at_least(s, 1, "ade");
    const auto& x = s.sorted();
    const std::size_t n = s.size();
    const double nd = static_cast<double>(n);
    auto objective = [&](double theta) {
        const LindleyParam param(theta);
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double weight = 2.0 * (i + 1) - 1.0;
            acc += weight * (std::log(cdf(x[i], param)) +
                             log_survival(x[n - 1 - i], param));
        }
        return -nd - acc / nd;
    };
    return minimize_objective(objective, EstimatorKind::Ade);
}

ThetaEstimate fit(const Sample& s, EstimatorKind kind) {
    switch (kind) {
        case EstimatorKind::Mle: return mle(s);
        case EstimatorKind::Pce: return pce(s);
        case EstimatorKind::Lse: return lse(s);
        case EstimatorKind::Wlse: return wlse(s);
        case EstimatorKind::Cvme: return cvme(s);
        case EstimatorKind::Ade: return ade(s);
        case EstimatorKind::Umvue:
            throw std::domain_error(
                "fit: umvue estimates the PDF/CDF directly, not theta; "
                "use the curve estimators");
    }
    throw std::domain_error("fit: unknown estimator kind");
}

}  // namespace lindley
