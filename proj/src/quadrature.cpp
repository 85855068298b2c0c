#include "psplit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace psplit {

void QuadratureSettings::validate() const {
  if (!(rel_tol > 0.0))
    throw std::invalid_argument("quadrature tolerance must be positive");
  if (max_intervals < 8)
    throw std::invalid_argument("quadrature interval budget too small");
  if (!(horizon > 0.0))
    throw std::invalid_argument("quadrature horizon must be positive");
}

namespace {

// Gauss-Kronrod (7,15) abscissae and weights on [-1,1]; the embedded 7-point
// Gauss rule uses the odd-indexed abscissae plus the midpoint.
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct Interval {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double err = 0.0;
};

Interval gk15(const std::function<double(double)>& f, double a, double b,
              long& evals) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(mid);
  double res_k = kWgk[7] * fc;
  double res_g = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(mid - dx);
    const double f2 = f(mid + dx);
    res_k += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) res_g += kWg[j / 2] * (f1 + f2);
  }
  evals += 15;
  Interval r;
  r.a = a;
  r.b = b;
  r.value = res_k * half;
  r.err = std::abs((res_k - res_g) * half);
  return r;
}

struct WorstFirst {
  bool operator()(const Interval& lhs, const Interval& rhs) const {
    if (lhs.err != rhs.err) return lhs.err < rhs.err;
    return lhs.a > rhs.a;  // deterministic tie-break toward the left interval
  }
};

QuadResult adapt_once(const std::function<double(double)>& f, double upper,
                      double slow_rate, double fast_rate, double rel_tol,
                      int max_intervals, double& tail_est) {
  QuadResult result;
  // Dyadic seeding: finest seed resolves 1/(100*fast_rate) next to t = 0.
  int levels = 4;
  {
    const double target = upper * fast_rate * 100.0;
    if (target > 16.0)
      levels = std::min(48, static_cast<int>(std::ceil(std::log2(target))));
  }
  std::priority_queue<Interval, std::vector<Interval>, WorstFirst> queue;
  int count = 0;
  double total_value = 0.0, total_err = 0.0;
  double left = 0.0;
  for (int k = levels; k >= 1; --k) {
    const double right = upper * std::ldexp(1.0, -(k - 1));
    const Interval seed = gk15(f, left, right, result.evals);
    total_value += seed.value;
    total_err += seed.err;
    queue.push(seed);
    ++count;
    left = right;
  }
  while (total_err > rel_tol * std::max(std::abs(total_value), 1e-300) &&
         count < max_intervals) {
    const Interval worst = queue.top();
    if (worst.err == 0.0) break;
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Interval lo = gk15(f, worst.a, mid, result.evals);
    const Interval hi = gk15(f, mid, worst.b, result.evals);
    queue.push(lo);
    queue.push(hi);
    ++count;
    total_value += lo.value + hi.value - worst.value;
    total_err += lo.err + hi.err - worst.err;
  }

  // Final deterministic resum in ascending-interval order.
  std::vector<Interval> items;
  items.reserve(queue.size());
  while (!queue.empty()) {
    items.push_back(queue.top());
    queue.pop();
  }
  std::sort(items.begin(), items.end(),
            [](const Interval& x, const Interval& y) { return x.a < y.a; });
  double value = 0.0, err = 0.0, outer_octave = 0.0;
  for (const Interval& it : items) {
    value += it.value;
    err += it.err;
    if (it.a >= 0.5 * upper) outer_octave += it.value;
  }

  // Geometric tail bound: for decay exp(-r t), the mass beyond `upper` is at
  // most the outermost-octave mass times q/(1-q) with q = exp(-r*upper/2).
  const double q = std::exp(-slow_rate * 0.5 * upper);
  tail_est = q < 1.0 ? std::abs(outer_octave) * q / (1.0 - q)
                     : std::numeric_limits<double>::infinity();

  result.value = value;
  result.abs_err = err + tail_est;
  result.converged =
      err <= rel_tol * std::max(std::abs(value), 1e-300) || err == 0.0;
  return result;
}

}  // namespace

QuadResult integrate_decaying(const std::function<double(double)>& f,
                              double upper, double slow_rate, double fast_rate,
                              double rel_tol, int max_intervals) {
  if (!(upper > 0.0)) throw std::invalid_argument("upper limit must be positive");
  if (!(slow_rate > 0.0) || !(fast_rate > 0.0))
    throw std::invalid_argument("decay rates must be positive");
  if (!(rel_tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

  double domain = upper;
  QuadResult result;
  for (int attempt = 0; attempt < 4; ++attempt) {
    double tail_est = 0.0;
    result = adapt_once(f, domain, slow_rate, fast_rate, rel_tol, max_intervals,
                        tail_est);
    if (tail_est <= rel_tol * std::max(std::abs(result.value), 1e-300)) break;
    domain *= 2.0;  // truncation tail dominates the budget: extend and retry
  }
  return result;
}

}  // namespace psplit
