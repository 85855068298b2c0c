#include "psplit/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace psplit {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

void AxisRange::validate() const {
  if (count < 2)
    throw std::invalid_argument("grid axis needs at least 2 points");
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
    throw std::invalid_argument("grid axis bounds must be finite with lo < hi");
}

double AxisRange::at(int i) const {
  return lo +
         (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

GridScanResult grid_scan(const Objective& objective,
                         const std::vector<AxisRange>& axes) {
  if (axes.empty()) throw std::invalid_argument("grid needs at least one axis");
  long total = 1;
  for (const AxisRange& axis : axes) {
    axis.validate();
    total *= axis.count;
  }
  const auto point_at = [&axes](long idx, std::vector<double>& x) {
    for (std::size_t a = axes.size(); a-- > 0;) {
      x[a] = axes[a].at(static_cast<int>(idx % axes[a].count));
      idx /= axes[a].count;
    }
  };

  std::vector<double> values(static_cast<std::size_t>(total));
  long failed = 0;
#pragma omp parallel for schedule(static) reduction(+ : failed)
  for (long idx = 0; idx < total; ++idx) {
    std::vector<double> x(axes.size());
    point_at(idx, x);
    double v;
    try {
      v = objective(x);
    } catch (...) {
      v = std::numeric_limits<double>::quiet_NaN();
    }
    if (std::isnan(v)) ++failed;
    values[static_cast<std::size_t>(idx)] = v;
  }

  // Serial argmax in index order: the first strict maximum wins, which
  // resolves ties toward the smallest coordinates axis by axis.
  long best_idx = -1;
  double best = kNegInf;
  for (long idx = 0; idx < total; ++idx) {
    const double v = values[static_cast<std::size_t>(idx)];
    if (!std::isnan(v) && v > best) {
      best = v;
      best_idx = idx;
    }
  }
  if (best_idx < 0)
    throw std::runtime_error("no grid point evaluated to a usable value");

  GridScanResult result;
  result.best_value = best;
  result.evaluated = total;
  result.failed = failed;
  result.best_point.resize(axes.size());
  point_at(best_idx, result.best_point);
  return result;
}

Optimum refine(const Objective& objective, const std::vector<double>& start,
               double tol, long max_evaluations) {
  if (start.empty()) throw std::invalid_argument("start point must be nonempty");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (max_evaluations < 1)
    throw std::invalid_argument("evaluation budget must be positive");
  const std::size_t n = start.size();

  Optimum out;
  out.point = start;
  out.value = kNegInf;
  long evals = 0;
  const auto eval = [&](const std::vector<double>& x) {
    ++evals;
    double v;
    try {
      v = objective(x);
    } catch (...) {
      v = kNegInf;
    }
    if (std::isnan(v)) v = kNegInf;
    if (v > out.value) {
      out.value = v;
      out.point = x;
    }
    return v;
  };

  // Simplex seeded from the start point with per-axis displacements.
  std::vector<std::vector<double>> pts(n + 1, start);
  std::vector<double> fv(n + 1);
  fv[0] = eval(pts[0]);
  for (std::size_t i = 0; i < n; ++i) {
    pts[i + 1][i] += 0.1 * std::max(std::abs(start[i]), 0.1);
    fv[i + 1] = eval(pts[i + 1]);
  }

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), xr(n), xe(n), xc(n);
  while (evals < max_evaluations) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&fv](std::size_t a, std::size_t b) {
                       return fv[a] > fv[b];  // best first (maximizing)
                     });
    const std::size_t ibest = order[0];
    const std::size_t iworst = order[n];

    double diameter = 0.0;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        diameter = std::max(diameter,
                            std::abs(pts[order[i]][k] - pts[ibest][k]));
    if (diameter < tol) {
      out.converged = true;
      break;
    }

    for (std::size_t k = 0; k < n; ++k) {
      double sum = 0.0;
      for (std::size_t i = 0; i <= n; ++i)
        if (i != iworst) sum += pts[i][k];
      centroid[k] = sum / static_cast<double>(n);
    }

    for (std::size_t k = 0; k < n; ++k)
      xr[k] = centroid[k] + (centroid[k] - pts[iworst][k]);
    const double fr = eval(xr);
    if (fr > fv[ibest]) {
      for (std::size_t k = 0; k < n; ++k)
        xe[k] = centroid[k] + 2.0 * (centroid[k] - pts[iworst][k]);
      const double fe = eval(xe);
      if (fe > fr) {
        pts[iworst] = xe;
        fv[iworst] = fe;
      } else {
        pts[iworst] = xr;
        fv[iworst] = fr;
      }
      continue;
    }
    if (fr > fv[order[n - 1]]) {  // better than the second worst
      pts[iworst] = xr;
      fv[iworst] = fr;
      continue;
    }
    const bool outside = fr > fv[iworst];
    for (std::size_t k = 0; k < n; ++k) {
      const double step = 0.5 * (centroid[k] - pts[iworst][k]);
      xc[k] = outside ? centroid[k] + step : centroid[k] - step;
    }
    const double fc = eval(xc);
    if ((outside && fc >= fr) || (!outside && fc > fv[iworst])) {
      pts[iworst] = xc;
      fv[iworst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {  // shrink toward the best vertex
      if (i == ibest) continue;
      for (std::size_t k = 0; k < n; ++k)
        pts[i][k] = pts[ibest][k] + 0.5 * (pts[i][k] - pts[ibest][k]);
      fv[i] = eval(pts[i]);
    }
  }

  out.evaluations = evals;
  return out;
}

}  // namespace psplit
