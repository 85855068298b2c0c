#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "psplit/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace psplit;

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> values;
  values.reserve(count);
  for (int i = 0; i < count; ++i)
    values.push_back(lo + (hi - lo) * static_cast<double>(i) /
                              static_cast<double>(count - 1));
  return values;
}

bool same_bits(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

// The parallel sweep must reproduce the serial one bit for bit: every row is
// an independent evaluation, so scheduling must not change any result.
bool identical(const std::vector<SweepRow>& a, const std::vector<SweepRow>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same_bits(a[i].gamma, b[i].gamma) ||
        !same_bits(a[i].omega, b[i].omega) ||
        !same_bits(a[i].phi, b[i].phi) ||
        !same_bits(a[i].delta, b[i].delta) || !same_bits(a[i].s, b[i].s) ||
        a[i].provenance != b[i].provenance)
      return false;
  }
  return true;
}

int report(const char* label, const SweepRequest& request) {
  std::vector<SweepRow> serial_rows;
  std::vector<SweepRow> parallel_rows;
  const double serial_time = seconds([&] { serial_rows = run_sweep_serial(request); });
  const double parallel_time = seconds([&] { parallel_rows = run_sweep(request); });
  const bool match = identical(serial_rows, parallel_rows);
  std::printf("%s: %zu points, serial %.3f s, parallel %.3f s, speedup %.2fx, rows %s\n",
              label, serial_rows.size(), serial_time, parallel_time,
              parallel_time > 0.0 ? serial_time / parallel_time : 0.0,
              match ? "identical" : "DIVERGED");
  return match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  int edge = 600;
  if (argc > 1) edge = std::atoi(argv[1]);
  if (edge < 2) {
    std::fprintf(stderr, "usage: bench_sweep [grid-edge >= 2]\n");
    return 2;
  }

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  int status = 0;

  SweepRequest analytic;
  analytic.kind = SystemKind::Unentangled;
  analytic.gamma_values = linspace(0.015, 3.0, edge);
  analytic.omega_values = linspace(0.0, 1.56, edge);
  analytic.provenance = Provenance::Analytic;
  status |= report("analytic grid", analytic);

  SweepRequest numeric;
  numeric.kind = SystemKind::Unentangled;
  numeric.gamma_values = linspace(0.6, 1.1, 2);
  numeric.omega_values = linspace(0.2, 0.9, 2);
  numeric.provenance = Provenance::Numeric;
  numeric.quad.rel_tol = 1e-6;
  status |= report("numeric grid", numeric);

  return status;
}
