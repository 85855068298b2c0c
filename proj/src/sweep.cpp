#include "psplit/sweep.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace psplit {

void SweepRequest::validate() const {
  if (gamma_values.empty() || omega_values.empty())
    throw std::invalid_argument("sweep needs at least one point per axis");
  for (double g : gamma_values)
    if (!(g > 0.0)) throw std::invalid_argument("gamma values must be positive");
  for (double w : omega_values)
    if (!std::isfinite(w))
      throw std::invalid_argument("omega values must be finite");
  if (!std::isfinite(phi)) throw std::invalid_argument("phi must be finite");
  if (kind == SystemKind::Entangled) {
    if (phi != 0.0)
      throw std::invalid_argument(
          "entangled efficiency is defined at phi = 0 only");
    if (!(delta >= 0.0))
      throw std::invalid_argument("delta must be nonnegative");
    if (provenance == Provenance::Numeric && !(chi > 0.0))
      throw std::invalid_argument("numeric entangled sweep needs chi > 0");
  }
  if (provenance == Provenance::Numeric) quad.validate();
}

namespace {

double sweep_value(const SweepRequest& req, double gamma, double omega) {
  if (req.provenance == Provenance::Analytic) {
    if (req.kind == SystemKind::Unentangled)
      return splitting_efficiency_analytic_unentangled(gamma,
                                                       {omega, req.phi});
    return splitting_efficiency_analytic_entangled(gamma, req.delta, omega);
  }
  SystemParams params;
  params.kind = req.kind;
  params.gamma = gamma;
  if (req.kind == SystemKind::Entangled) {
    params.delta = req.delta;
    params.chi = req.chi;
  }
  return splitting_efficiency_numeric(params, {omega, req.phi}, req.quad).s;
}

std::vector<SweepRow> run_sweep_impl(const SweepRequest& req, bool parallel) {
  req.validate();
  const long ng = static_cast<long>(req.gamma_values.size());
  const long nw = static_cast<long>(req.omega_values.size());
  const long total = ng * nw;
  std::vector<SweepRow> rows(static_cast<std::size_t>(total));
  const auto fill_row = [&](long idx) {
    SweepRow& row = rows[static_cast<std::size_t>(idx)];
    row.gamma = req.gamma_values[static_cast<std::size_t>(idx / nw)];
    row.omega = req.omega_values[static_cast<std::size_t>(idx % nw)];
    row.phi = req.phi;
    row.delta = req.kind == SystemKind::Entangled ? req.delta : 0.0;
    row.provenance = req.provenance;
    try {
      row.s = sweep_value(req, row.gamma, row.omega);
    } catch (...) {
      row.s = std::numeric_limits<double>::quiet_NaN();
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < total; ++idx) fill_row(idx);
  } else {
    for (long idx = 0; idx < total; ++idx) fill_row(idx);
  }
  return rows;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepRequest& request) {
  return run_sweep_impl(request, true);
}

std::vector<SweepRow> run_sweep_serial(const SweepRequest& request) {
  return run_sweep_impl(request, false);
}

}  // namespace psplit
