#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace psplit {

struct QuadratureSettings {
  double rel_tol = 1e-7;      // relative tolerance per 1-D integral
  int max_intervals = 4000;   // subdivision budget per 1-D integral
  double horizon = 20.0;      // truncation: T = horizon / slowest decay rate

  void validate() const;  // throws std::invalid_argument
};

struct QuadResult {
  double value = 0.0;
  double abs_err = 0.0;  // accumulated estimate incl. truncation tail bound
  long evals = 0;
  bool converged = false;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}
  double achieved_error() const { return achieved_error_; }

 private:
  double achieved_error_;
};

// Adaptive Gauss-Kronrod (7,15) integration of f over [0, upper] for
// integrands bounded by C*exp(-slow_rate*t) at large t.  The interval worklist
// is seeded dyadically from the left so structure at the 1/fast_rate scale is
// found even when upper is many orders of magnitude larger.  The geometric
// tail beyond `upper` is estimated from the outermost octave and added to
// abs_err; when it dominates the requested tolerance the domain is doubled
// and the integral recomputed.
QuadResult integrate_decaying(const std::function<double(double)>& f,
                              double upper, double slow_rate, double fast_rate,
                              double rel_tol, int max_intervals);

}  // namespace psplit
