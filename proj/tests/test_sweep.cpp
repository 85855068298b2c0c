#include <bit>
#include <cmath>
#include <cstdint>

#include "doctest.h"
#include "psplit/sweep.hpp"

using namespace psplit;

namespace {

bool same_bits(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

SweepRequest small_request() {
  SweepRequest request;
  request.gamma_values = {0.4, 0.9, 1.7};
  request.omega_values = {0.0, 0.5};
  request.phi = 0.25;
  return request;
}

}  // namespace

TEST_CASE("rows come out row-major with the grid values echoed") {
  const SweepRequest request = small_request();
  const std::vector<SweepRow> rows = run_sweep(request);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].gamma == 0.4);
  CHECK(rows[0].omega == 0.0);
  CHECK(rows[1].gamma == 0.4);
  CHECK(rows[1].omega == 0.5);
  CHECK(rows[2].gamma == 0.9);
  CHECK(rows[5].gamma == 1.7);
  CHECK(rows[5].omega == 0.5);
  for (const SweepRow& row : rows) {
    CHECK(row.phi == 0.25);
    CHECK(row.delta == 0.0);
    CHECK(row.provenance == Provenance::Analytic);
    CHECK(row.s == splitting_efficiency_analytic_unentangled(
                       row.gamma, {row.omega, row.phi}));
  }
}

TEST_CASE("serial and parallel sweeps agree bit for bit") {
  const SweepRequest request = small_request();
  const std::vector<SweepRow> parallel = run_sweep(request);
  const std::vector<SweepRow> serial = run_sweep_serial(request);
  REQUIRE(parallel.size() == serial.size());
  for (std::size_t i = 0; i < parallel.size(); ++i) {
    CHECK(same_bits(parallel[i].s, serial[i].s));
    CHECK(same_bits(parallel[i].gamma, serial[i].gamma));
    CHECK(same_bits(parallel[i].omega, serial[i].omega));
  }
}

TEST_CASE("numeric provenance routes through the quadrature pipeline") {
  SweepRequest request;
  request.gamma_values = {0.7};
  request.omega_values = {0.3};
  request.phi = -0.4;
  request.provenance = Provenance::Numeric;
  request.quad.rel_tol = 1e-8;
  const std::vector<SweepRow> rows = run_sweep(request);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].provenance == Provenance::Numeric);
  const double analytic =
      splitting_efficiency_analytic_unentangled(0.7, {0.3, -0.4});
  CHECK(std::abs(rows[0].s - analytic) <= 1e-7);
}

TEST_CASE("entangled analytic sweep evaluates the closed form at delta") {
  SweepRequest request;
  request.kind = SystemKind::Entangled;
  request.gamma_values = {0.8, 1.5};
  request.omega_values = {0.2};
  request.delta = 0.5;
  const std::vector<SweepRow> rows = run_sweep(request);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].delta == 0.5);
  CHECK(rows[0].s ==
        splitting_efficiency_analytic_entangled(0.8, 0.5, 0.2));
  CHECK(rows[1].s ==
        splitting_efficiency_analytic_entangled(1.5, 0.5, 0.2));
}

TEST_CASE("a failing point yields NaN instead of poisoning the sweep") {
  SweepRequest request;
  request.kind = SystemKind::Entangled;
  request.provenance = Provenance::Numeric;
  request.gamma_values = {0.8};
  request.omega_values = {0.2};
  request.delta = 0.0;  // never emits: every point fails
  request.chi = 1e-3;
  const std::vector<SweepRow> rows = run_sweep(request);
  REQUIRE(rows.size() == 1);
  CHECK(std::isnan(rows[0].s));
}

TEST_CASE("request validation") {
  SweepRequest request = small_request();
  request.gamma_values.clear();
  CHECK_THROWS_AS(request.validate(), std::invalid_argument);

  request = small_request();
  request.gamma_values[1] = -0.2;
  CHECK_THROWS_AS(request.validate(), std::invalid_argument);

  request = small_request();
  request.kind = SystemKind::Entangled;
  request.phi = 0.25;  // nonzero phase is undefined for the entangled form
  CHECK_THROWS_AS(request.validate(), std::invalid_argument);

  request = small_request();
  request.kind = SystemKind::Entangled;
  request.phi = 0.0;
  request.provenance = Provenance::Numeric;
  request.chi = 0.0;
  CHECK_THROWS_AS(request.validate(), std::invalid_argument);

  request = small_request();
  request.provenance = Provenance::Numeric;
  request.quad.rel_tol = 0.0;
  CHECK_THROWS_AS(request.validate(), std::invalid_argument);
}
