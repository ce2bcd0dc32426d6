#pragma once

#include <functional>
#include <stdexcept>

namespace lindley {

struct Bracket {
    double lo;
    double hi;
    double tol = 1e-8;  // absolute x-tolerance

    Bracket(double lo_value, double hi_value, double tol_value = 1e-8);
};

/// The objective produced a non-finite value; carries the offending abscissa.
class evaluation_error : public std::runtime_error {
  public:
    evaluation_error(const std::string& message, double abscissa)
        : std::runtime_error(message), abscissa_(abscissa) {}
    double abscissa() const { return abscissa_; }

  private:
    double abscissa_;
};

/// find_root was called without a sign change on the bracket.
class bracketing_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct MinimizeResult {
    double argmin;
    double min_value;
    int evaluations;
};

/// Brent's method (golden section + successive parabolic interpolation) on
/// [lo, hi]. For a unimodal objective the result is the global minimizer on
/// the bracket, within tol. Throws evaluation_error on a non-finite objective
/// value and std::runtime_error when max_evaluations is exhausted.
MinimizeResult minimize_scalar(const std::function<double(double)>& objective,
                               const Bracket& bracket,
                               int max_evaluations = 10000);

/// Brent's zeroin on [lo, hi]; requires f(lo) * f(hi) <= 0, else throws
/// bracketing_error.
double find_root(const std::function<double(double)>& f, const Bracket& bracket,
                 int max_evaluations = 10000);

}  // namespace lindley
