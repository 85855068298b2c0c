#pragma once

#include "psplit/correlations.hpp"
#include "psplit/quadrature.hpp"

#include <string>

namespace psplit {

enum class Provenance { Analytic, Numeric };

std::string to_string(Provenance p);

struct EfficiencyResult {
  double s = 0.0;     // p_cd + p_dc
  double p_cc = 0.0;
  double p_cd = 0.0;
  double p_dc = 0.0;
  double p_dd = 0.0;
  double quad_error = 0.0;  // propagated quadrature error estimate
  Provenance provenance = Provenance::Numeric;
  SystemParams params;
  MziParams mzi;
};

// Probability that the first photon exits `first` and the second exits
// `second`: the detection density integrated over 0 <= t, tau < infinity.
// Throws QuadratureError when the tolerance cannot be met within budget.
double port_probability(const SystemParams& params, const MziParams& mzi,
                        Port first, Port second,
                        const QuadratureSettings& settings = {});

// Unentangled: the four port probabilities by quadrature (their sum is a
// consistency check, not an input).  Entangled: raw probabilities are
// post-selected on both photons being detected, evaluated at chi and chi/2,
// and Richardson-extrapolated to the ideal-source limit chi -> 0.
EfficiencyResult splitting_efficiency_numeric(
    const SystemParams& params, const MziParams& mzi,
    const QuadratureSettings& settings = {});

// Closed-form splitting efficiency, kappa = 1, gamma in units of kappa.
double splitting_efficiency_analytic_unentangled(double gamma_over_kappa,
                                                 const MziParams& mzi);

// Closed-form entangled-source efficiency; derived at phi = 0.
double splitting_efficiency_analytic_entangled(double gamma_over_kappa,
                                               double delta, double omega);

}  // namespace psplit
