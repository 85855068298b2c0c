#pragma once

#include <functional>
#include <vector>

namespace psplit {

// Objective to MAXIMIZE.  Must be pure and thread-safe: grid points may be
// evaluated concurrently.  Callers restrict the domain by returning -inf (or
// throwing) outside their bounds.
using Objective = std::function<double(const std::vector<double>&)>;

struct AxisRange {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;  // inclusive linspace; >= 2

  void validate() const;
  double at(int i) const;
};

struct GridScanResult {
  std::vector<double> best_point;
  double best_value = 0.0;
  long evaluated = 0;
  long failed = 0;  // points whose evaluation threw (skipped)
};

// Exhaustive scan over the tensor grid.  Ties break toward the earlier point
// in lexicographic axis order, so the smallest coordinates win.  Throws
// std::runtime_error when every point fails.
GridScanResult grid_scan(const Objective& objective,
                         const std::vector<AxisRange>& axes);

struct Optimum {
  std::vector<double> point;
  double value = 0.0;
  long evaluations = 0;
  bool converged = false;  // simplex diameter reached tol within budget
};

// Derivative-free local maximization (Nelder-Mead simplex) from `start`.
// Evaluations that throw count as -inf.  The returned optimum is the best
// point ever evaluated, including `start`, so the result never falls below
// the start value.  `converged` is false when the evaluation budget ran out
// before the simplex diameter dropped under `tol`.
Optimum refine(const Objective& objective, const std::vector<double>& start,
               double tol = 1e-10, long max_evaluations = 20000);

}  // namespace psplit
