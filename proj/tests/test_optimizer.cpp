#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "psplit/optimizer.hpp"

using namespace psplit;

TEST_CASE("axis ranges are inclusive linspaces") {
  const AxisRange axis{1.0, 3.0, 5};
  CHECK_NOTHROW(axis.validate());
  CHECK(axis.at(0) == 1.0);
  CHECK(axis.at(4) == 3.0);
  CHECK(axis.at(2) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS((AxisRange{1.0, 3.0, 1}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((AxisRange{3.0, 1.0, 5}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((AxisRange{1.0, 1.0, 5}).validate(), std::invalid_argument);
}

TEST_CASE("grid scan finds the best lattice point") {
  const Objective f = [](const std::vector<double>& x) {
    return -(x[0] - 0.5) * (x[0] - 0.5) - (x[1] + 0.25) * (x[1] + 0.25);
  };
  // 0.5 and -0.25 are exact lattice points of these ranges
  const GridScanResult r =
      grid_scan(f, {AxisRange{0.0, 1.0, 5}, AxisRange{-1.0, 0.0, 5}});
  CHECK(r.evaluated == 25);
  CHECK(r.failed == 0);
  REQUIRE(r.best_point.size() == 2);
  CHECK(r.best_point[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r.best_point[1] == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(r.best_value == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("grid ties break toward the smallest coordinates") {
  const Objective flat = [](const std::vector<double>&) { return 1.0; };
  const GridScanResult r =
      grid_scan(flat, {AxisRange{2.0, 4.0, 3}, AxisRange{-1.0, 1.0, 3}});
  CHECK(r.best_point[0] == 2.0);
  CHECK(r.best_point[1] == -1.0);
}

TEST_CASE("throwing and NaN evaluations are skipped but counted") {
  const Objective partial = [](const std::vector<double>& x) {
    if (x[0] < -0.1) throw std::runtime_error("left half fails");
    if (x[0] > 0.7) return std::numeric_limits<double>::quiet_NaN();
    return -x[0];
  };
  const GridScanResult r = grid_scan(partial, {AxisRange{-1.0, 1.0, 11}});
  CHECK(r.evaluated == 11);
  CHECK(r.failed == 7);  // five negative points threw, 0.8 and 1.0 went NaN
  CHECK(r.best_point[0] == doctest::Approx(0.0).epsilon(1e-15));

  const Objective broken = [](const std::vector<double>&) -> double {
    throw std::runtime_error("always fails");
  };
  CHECK_THROWS_AS(grid_scan(broken, {AxisRange{0.0, 1.0, 4}}),
                  std::runtime_error);
}

TEST_CASE("simplex refinement converges on smooth objectives") {
  const Objective quad = [](const std::vector<double>& x) {
    const double dx = x[0] - 1.2345678;
    const double dy = x[1] + 0.333;
    return 5.0 - dx * dx - 3.0 * dy * dy - dx * dy;
  };
  const Optimum r = refine(quad, {0.0, 0.0});
  CHECK(r.converged);
  // stationary point of the coupled quadratic
  const double fx = quad(r.point);
  CHECK(fx >= quad({0.0, 0.0}));
  CHECK(std::abs(r.value - fx) <= 1e-12);
  // gradient vanishes at the reported optimum
  const double h = 1e-6;
  CHECK(std::abs(quad({r.point[0] + h, r.point[1]}) -
                 quad({r.point[0] - h, r.point[1]})) <= 1e-9);
  CHECK(std::abs(quad({r.point[0], r.point[1] + h}) -
                 quad({r.point[0], r.point[1] - h})) <= 1e-9);
}

TEST_CASE("refinement in one dimension") {
  const Objective f = [](const std::vector<double>& x) {
    return -(x[0] - 1.234567) * (x[0] - 1.234567);
  };
  const Optimum r = refine(f, {0.2});
  CHECK(r.converged);
  CHECK(r.point[0] == doctest::Approx(1.234567).epsilon(1e-6));
}

TEST_CASE("refinement never falls below its start") {
  const Objective spike = [](const std::vector<double>& x) {
    // global maximum exactly at the start; everything else is worse
    return -(x[0] * x[0] + x[1] * x[1]);
  };
  const Optimum r = refine(spike, {0.0, 0.0});
  CHECK(r.value >= spike({0.0, 0.0}) - 0.0);
  CHECK(r.value == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("minus-infinity fences confine the simplex") {
  const Objective fenced = [](const std::vector<double>& x) {
    if (x[0] > 1.0) return -std::numeric_limits<double>::infinity();
    return -(x[0] - 2.0) * (x[0] - 2.0);  // pulls toward the fence
  };
  const Optimum r = refine(fenced, {0.5});
  CHECK(r.point[0] <= 1.0 + 1e-12);
  CHECK(r.value <= fenced({1.0}) + 1e-9);
  CHECK(r.value >= fenced({0.5}));
}

TEST_CASE("throwing objectives count as minus infinity inside refine") {
  const Objective moody = [](const std::vector<double>& x) {
    if (x[0] > 1.0) throw std::runtime_error("outside");
    return x[0];
  };
  const Optimum r = refine(moody, {0.9});
  CHECK(r.point[0] <= 1.0 + 1e-12);
  CHECK(r.value >= 0.9);
}

TEST_CASE("exhausted budget reports non-convergence") {
  const Objective f = [](const std::vector<double>& x) {
    return -(x[0] - 3.0) * (x[0] - 3.0) - (x[1] - 4.0) * (x[1] - 4.0);
  };
  const Optimum r = refine(f, {0.0, 0.0}, 1e-14, 10);
  CHECK_FALSE(r.converged);
  CHECK(r.evaluations <= 10 + 3);  // simplex setup may finish its vertices
  CHECK(r.value >= f({0.0, 0.0}));
}

TEST_CASE("narrow curved valley") {
  const Objective banana = [](const std::vector<double>& x) {
    const double a = 1.0 - x[0];
    const double b = x[1] - x[0] * x[0];
    return -(a * a + 100.0 * b * b);
  };
  const Optimum r = refine(banana, {0.6, 0.2});
  CHECK(r.value >= -1e-6);
  CHECK(r.point[0] == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(r.point[1] == doctest::Approx(1.0).epsilon(1e-3));
}
