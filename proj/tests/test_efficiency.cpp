#include <cmath>

#include "doctest.h"
#include "psplit/efficiency.hpp"
#include "test_util.hpp"

using namespace psplit;

namespace {

// Closed-form values frozen from an independent 40-digit evaluation.
constexpr double kSAtPaperOptimum = 0.7500384938534753;   // (0.92, 0.303, 0)
constexpr double kSRandom1 = 0.5330132456529875;          // (0.5, 0.7, 0.3)
constexpr double kSRandom2 = 0.3118240090630912;          // (2.31, 1.11, -0.77)
constexpr double kEntAtPaperPoint = 0.9049878883952717;   // (0.55, d=0, 0.283)
constexpr double kEntRandom1 = 0.8114958758127517;        // (0.8, 0.5, 0.2)
constexpr double kEntRandom2 = 0.7498934007603763;        // (1.5, 1.0, 0.4)
constexpr double kEntGolden = 0.7698003589195010;         // ((sqrt3-1)/2, 0, 0) = 4/(3 sqrt 3)

SystemParams plain(double gamma) {
  SystemParams params;
  params.gamma = gamma;
  return params;
}

SystemParams entangled(double gamma, double delta, double chi = 1e-3) {
  SystemParams params;
  params.kind = SystemKind::Entangled;
  params.gamma = gamma;
  params.delta = delta;
  params.chi = chi;
  return params;
}

}  // namespace

TEST_CASE("closed-form efficiency reproduces frozen reference values") {
  CHECK(splitting_efficiency_analytic_unentangled(0.92, {0.303, 0.0}) ==
        doctest::Approx(kSAtPaperOptimum).epsilon(1e-13));
  CHECK(splitting_efficiency_analytic_unentangled(1.0, {0.0, 0.0}) ==
        doctest::Approx(28.0 / 45.0).epsilon(1e-14));
  CHECK(splitting_efficiency_analytic_unentangled(0.5, {0.7, 0.3}) ==
        doctest::Approx(kSRandom1).epsilon(1e-13));
  CHECK(splitting_efficiency_analytic_unentangled(2.31, {1.11, -0.77}) ==
        doctest::Approx(kSRandom2).epsilon(1e-13));
}

TEST_CASE("closed-form entangled efficiency reproduces frozen references") {
  CHECK(splitting_efficiency_analytic_entangled(1.0, 0.0, 0.0) ==
        doctest::Approx(16.0 / 27.0).epsilon(1e-14));
  CHECK(splitting_efficiency_analytic_entangled(0.55, 0.0, 0.283) ==
        doctest::Approx(kEntAtPaperPoint).epsilon(1e-13));
  const double golden_gamma = (std::sqrt(3.0) - 1.0) / 2.0;
  CHECK(splitting_efficiency_analytic_entangled(golden_gamma, 0.0, 0.0) ==
        doctest::Approx(kEntGolden).epsilon(1e-13));
  CHECK(splitting_efficiency_analytic_entangled(0.8, 0.5, 0.2) ==
        doctest::Approx(kEntRandom1).epsilon(1e-13));
  CHECK(splitting_efficiency_analytic_entangled(1.5, 1.0, 0.4) ==
        doctest::Approx(kEntRandom2).epsilon(1e-13));
}

TEST_CASE("decoupled-atom limit follows the linear-optics law") {
  const double pi = 4.0 * std::atan(1.0);
  // S -> sin^2(2 omega)/2 as gamma -> 0
  CHECK(splitting_efficiency_analytic_unentangled(1e-12, {pi / 8.0, 0.0}) ==
        doctest::Approx(0.25).epsilon(1e-9));
  CHECK(splitting_efficiency_analytic_unentangled(1e-12, {pi / 4.0, 0.0}) ==
        doctest::Approx(0.5).epsilon(1e-9));
  CHECK(std::abs(splitting_efficiency_analytic_unentangled(1e-12, {0.0, 0.0})) <=
        1e-11);
}

TEST_CASE("same-port probability at omega 0 is the blockade value, not zero") {
  QuadratureSettings settings;
  settings.rel_tol = 1e-9;
  const double p_cc =
      port_probability(plain(1.0), {0.0, 0.0}, Port::C, Port::C, settings);
  CHECK(p_cc == doctest::Approx(8.0 / 45.0).epsilon(1e-8));
  const double p_dd =
      port_probability(plain(1.0), {0.0, 0.0}, Port::D, Port::D, settings);
  CHECK(p_dd == doctest::Approx(0.2).epsilon(1e-8));
}

TEST_CASE("four port probabilities account for every photon pair") {
  auto gen = testutil::rng(33);
  for (int trial = 0; trial < 4; ++trial) {
    const SystemParams params = plain(testutil::uniform(gen, 0.1, 2.5));
    const MziParams mzi{testutil::uniform(gen, 0.0, 1.5),
                        testutil::uniform(gen, -3.0, 3.0)};
    QuadratureSettings settings;
    settings.rel_tol = 1e-9;
    const EfficiencyResult r =
        splitting_efficiency_numeric(params, mzi, settings);
    CHECK(std::abs(r.p_cc + r.p_cd + r.p_dc + r.p_dd - 1.0) <= 1e-8);
    CHECK(r.s == r.p_cd + r.p_dc);
    CHECK(r.provenance == Provenance::Numeric);
    CHECK(r.quad_error > 0.0);
    CHECK(r.quad_error <= 1e-6);
  }
}

TEST_CASE("quadrature pipeline lands on the closed form") {
  auto gen = testutil::rng(44);
  QuadratureSettings settings;  // default 1e-7 tolerance
  for (int trial = 0; trial < 6; ++trial) {
    const double gamma = testutil::uniform(gen, 0.08, 2.8);
    const MziParams mzi{testutil::uniform(gen, 0.0, 1.57),
                        testutil::uniform(gen, -3.1, 3.1)};
    const EfficiencyResult r =
        splitting_efficiency_numeric(plain(gamma), mzi, settings);
    const double analytic =
        splitting_efficiency_analytic_unentangled(gamma, mzi);
    CHECK(std::abs(r.s - analytic) <= 1e-6);
  }
}

TEST_CASE("entangled numeric efficiency extrapolates onto the closed form") {
  QuadratureSettings settings;
  const struct {
    double gamma, delta, omega;
  } cases[] = {{0.55, 1e-9, 0.283}, {0.8, 0.5, 0.2}, {1.5, 1.0, 0.4}};
  for (const auto& c : cases) {
    const EfficiencyResult r = splitting_efficiency_numeric(
        entangled(c.gamma, c.delta), {c.omega, 0.0}, settings);
    const double analytic =
        splitting_efficiency_analytic_entangled(c.gamma, c.delta, c.omega);
    CHECK(std::abs(r.s - analytic) <= 5e-3);
    // post-selection keeps the four conditioned probabilities normalized
    CHECK(std::abs(r.p_cc + r.p_cd + r.p_dc + r.p_dd - 1.0) <= 1e-8);
  }
  // the delta -> 0 limit point of the acceptance table, against Eq-free
  // frozen value at delta = 0 exactly
  const EfficiencyResult r = splitting_efficiency_numeric(
      entangled(0.55, 1e-9), {0.283, 0.0}, settings);
  CHECK(std::abs(r.s - kEntAtPaperPoint) <= 5e-3);
}

TEST_CASE("entangled numeric edge cases") {
  QuadratureSettings settings;
  // chi = 0 leaves nothing to extrapolate from
  CHECK_THROWS_AS(splitting_efficiency_numeric(entangled(0.8, 0.5, 0.0),
                                               {0.2, 0.0}, settings),
                  std::invalid_argument);
  // delta = 0 exactly never emits: no detected pair to condition on
  CHECK_THROWS_AS(splitting_efficiency_numeric(entangled(0.8, 0.0, 1e-3),
                                               {0.2, 0.0}, settings),
                  std::runtime_error);
}

TEST_CASE("invalid quadrature settings are rejected up front") {
  QuadratureSettings settings;
  settings.rel_tol = 0.0;
  CHECK_THROWS_AS(
      port_probability(plain(1.0), {0.0, 0.0}, Port::C, Port::D, settings),
      std::invalid_argument);
}

TEST_CASE("provenance labels round-trip") {
  CHECK(to_string(Provenance::Analytic) == "analytic");
  CHECK(to_string(Provenance::Numeric) == "numeric");
}
