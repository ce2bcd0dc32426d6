#include "lindley/optimize.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace lindley {

namespace {

constexpr double kGolden = 0.3819660112501051;  // (3 - sqrt(5)) / 2
const double kSqrtEps = std::sqrt(std::numeric_limits<double>::epsilon());

class Budget {
  public:
    Budget(const std::function<double(double)>& f, int max_evaluations)
        : f_(f), remaining_(max_evaluations) {}

    double operator()(double x) {
        if (remaining_-- <= 0) {
            throw std::runtime_error("scalar optimizer: evaluation budget exhausted");
        }
        ++count_;
        const double value = f_(x);
        if (!std::isfinite(value)) {
            throw evaluation_error(
                "scalar optimizer: objective returned a non-finite value at x = " +
                    std::to_string(x),
                x);
        }
        return value;
    }

    int count() const { return count_; }

  private:
    const std::function<double(double)>& f_;
    int remaining_;
    int count_ = 0;
};

}  // namespace

Bracket::Bracket(double lo_value, double hi_value, double tol_value)
    : lo(lo_value), hi(hi_value), tol(tol_value) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw std::domain_error("Bracket: requires finite lo < hi");
    }
    if (!(tol > 0.0)) throw std::domain_error("Bracket: tol must be positive");
}

MinimizeResult minimize_scalar(const std::function<double(double)>& objective,
                               const Bracket& bracket, int max_evaluations) {
    Budget f(objective, max_evaluations);

    double a = bracket.lo;
    double b = bracket.hi;
    double x = a + kGolden * (b - a);
    double w = x, v = x;
    double fx = f(x);
    double fw = fx, fv = fx;
    double d = 0.0, e = 0.0;

    while (true) {
        const double m = 0.5 * (a + b);
        const double tol1 = kSqrtEps * std::fabs(x) + bracket.tol / 3.0;
        const double tol2 = 2.0 * tol1;
        if (std::fabs(x - m) <= tol2 - 0.5 * (b - a)) break;

        bool use_golden = true;
        if (std::fabs(e) > tol1) {
            // Fit a parabola through (v, fv), (w, fw), (x, fx).
            const double r = (x - w) * (fx - fv);
            double q = (x - v) * (fx - fw);
            double p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0) p = -p;
            q = std::fabs(q);
            const double e_prev = e;
            e = d;
            if (std::fabs(p) < std::fabs(0.5 * q * e_prev) && p > q * (a - x) &&
                p < q * (b - x)) {
                d = p / q;
                double u = x + d;
                if (u - a < tol2 || b - u < tol2) d = (x < m) ? tol1 : -tol1;
                use_golden = false;
            }
        }
        if (use_golden) {
            e = (x < m) ? b - x : a - x;
            d = kGolden * e;
        }

        const double u = (std::fabs(d) >= tol1) ? x + d : x + ((d > 0.0) ? tol1 : -tol1);
        const double fu = f(u);

        if (fu <= fx) {
            if (u < x) b = x; else a = x;
            v = w; fv = fw;
            w = x; fw = fx;
            x = u; fx = fu;
        } else {
            if (u < x) a = u; else b = u;
            if (fu <= fw || w == x) {
                v = w; fv = fw;
                w = u; fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u; fv = fu;
            }
        }
    }

    return MinimizeResult{x, fx, f.count()};
}

double find_root(const std::function<double(double)>& func, const Bracket& bracket,
                 int max_evaluations) {
    Budget f(func, max_evaluations);

    double a = bracket.lo;
    double b = bracket.hi;
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) {
        throw bracketing_error("find_root: no sign change on [" + std::to_string(a) +
                               ", " + std::to_string(b) + "]");
    }

    double c = a, fc = fa;
    double d = b - a, e = d;
    while (true) {
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::fabs(b) +
                            0.5 * bracket.tol;
        const double m = 0.5 * (c - b);
        if (std::fabs(m) <= tol1 || fb == 0.0) return b;

        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                // secant
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                // inverse quadratic interpolation
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            if (2.0 * p < std::min(3.0 * m * q - std::fabs(tol1 * q), std::fabs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += (std::fabs(d) > tol1) ? d : ((m > 0.0) ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
}

}  // namespace lindley
