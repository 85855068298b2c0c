#include "psplit/efficiency.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace psplit {

std::string to_string(Provenance p) {
  return p == Provenance::Analytic ? "analytic" : "numeric";
}

namespace {

struct Rates {
  double slow = 0.0;
  double fast = 0.0;
};

// The cavity decays at kappa and the enhanced atom at 2*gamma; these set the
// time scales of the photon pair once it is inside the system.
Rates pair_rates(const SystemParams& params) {
  return {std::min(kKappa, 2.0 * params.gamma),
          std::max(kKappa, 2.0 * params.gamma)};
}

// The first-detection time additionally inherits the source lifetime
// 1/(2*delta).  Detecting a photon de-excites the source exactly (the output
// modes annihilate the source-excited component), so the delay integral keeps
// the bare pair rates even for the entangled system.
Rates first_detection_rates(const SystemParams& params) {
  Rates r = pair_rates(params);
  if (params.kind == SystemKind::Entangled && params.delta > 0.0) {
    r.slow = std::min(r.slow, 2.0 * params.delta);
    r.fast = std::max(r.fast, 2.0 * params.delta);
  }
  return r;
}

struct PortTerm {
  double value = 0.0;
  double abs_err = 0.0;
};

PortTerm joint_probability(const CorrelationEvaluator& eval,
                           const SystemParams& params, Port first, Port second,
                           const QuadratureSettings& settings) {
  const Rates outer = first_detection_rates(params);
  const Rates inner = pair_rates(params);
  const double outer_upper = settings.horizon / outer.slow;
  const double inner_upper = settings.horizon / inner.slow;
  const double inner_tol = settings.rel_tol / 10.0;

  const auto density_after_first = [&](double t) {
    const Vector w = eval.after_first_jump(first, t);
    if (w.squaredNorm() == 0.0) return 0.0;
    const QuadResult delay = integrate_decaying(
        [&](double tau) {
          return eval.second_detection_density(second, w, tau);
        },
        inner_upper, inner.slow, inner.fast, inner_tol,
        settings.max_intervals);
    if (!delay.converged)
      throw QuadratureError("detection-delay integral did not converge",
                            delay.abs_err);
    return delay.value;
  };
  const QuadResult joint =
      integrate_decaying(density_after_first, outer_upper, outer.slow,
                         outer.fast, settings.rel_tol, settings.max_intervals);
  if (!joint.converged)
    throw QuadratureError("first-detection integral did not converge",
                          joint.abs_err);
  return {joint.value, joint.abs_err};
}

struct RawProbabilities {
  double cc = 0.0;
  double cd = 0.0;
  double dc = 0.0;
  double dd = 0.0;
  double err = 0.0;  // summed quadrature error estimates

  double sum() const { return cc + cd + dc + dd; }
};

RawProbabilities all_port_probabilities(const SystemParams& params,
                                        const MziParams& mzi,
                                        const QuadratureSettings& settings) {
  const CorrelationEvaluator eval(params, mzi);  // caches shared by all four
  RawProbabilities p;
  PortTerm term = joint_probability(eval, params, Port::C, Port::C, settings);
  p.cc = term.value;
  p.err += term.abs_err;
  term = joint_probability(eval, params, Port::C, Port::D, settings);
  p.cd = term.value;
  p.err += term.abs_err;
  term = joint_probability(eval, params, Port::D, Port::C, settings);
  p.dc = term.value;
  p.err += term.abs_err;
  term = joint_probability(eval, params, Port::D, Port::D, settings);
  p.dd = term.value;
  p.err += term.abs_err;
  return p;
}

}  // namespace

double port_probability(const SystemParams& params, const MziParams& mzi,
                        Port first, Port second,
                        const QuadratureSettings& settings) {
  params.validate();
  settings.validate();
  const CorrelationEvaluator eval(params, mzi);
  return joint_probability(eval, params, first, second, settings).value;
}

EfficiencyResult splitting_efficiency_numeric(const SystemParams& params,
                                              const MziParams& mzi,
                                              const QuadratureSettings& settings) {
  params.validate();
  settings.validate();
  EfficiencyResult result;
  result.params = params;
  result.mzi = mzi;
  result.provenance = Provenance::Numeric;

  if (params.kind == SystemKind::Unentangled) {
    const RawProbabilities p = all_port_probabilities(params, mzi, settings);
    result.p_cc = p.cc;
    result.p_cd = p.cd;
    result.p_dc = p.dc;
    result.p_dd = p.dd;
    result.s = p.cd + p.dc;
    result.quad_error = p.err;
    return result;
  }

  // Entangled source: the emission into the feeder cavity is lossy at finite
  // chi, so probabilities are conditioned on both photons being detected and
  // then Richardson-extrapolated to the ideal-emission limit chi -> 0 from
  // runs at chi and chi/2.
  if (!(params.chi > 0.0))
    throw std::invalid_argument(
        "entangled efficiency needs chi > 0 to extrapolate from");
  SystemParams half = params;
  half.chi = 0.5 * params.chi;
  const RawProbabilities at_chi = all_port_probabilities(params, mzi, settings);
  const RawProbabilities at_half = all_port_probabilities(half, mzi, settings);
  const double norm_chi = at_chi.sum();
  const double norm_half = at_half.sum();
  if (!(norm_chi > 0.0) || !(norm_half > 0.0))
    throw std::runtime_error("no detected-pair probability to condition on");
  result.p_cc = 2.0 * at_half.cc / norm_half - at_chi.cc / norm_chi;
  result.p_cd = 2.0 * at_half.cd / norm_half - at_chi.cd / norm_chi;
  result.p_dc = 2.0 * at_half.dc / norm_half - at_chi.dc / norm_chi;
  result.p_dd = 2.0 * at_half.dd / norm_half - at_chi.dd / norm_chi;
  result.s = result.p_cd + result.p_dc;
  result.quad_error = 2.0 * at_half.err / norm_half + at_chi.err / norm_chi;
  return result;
}

double splitting_efficiency_analytic_unentangled(double gamma_over_kappa,
                                                 const MziParams& mzi) {
  const double g = gamma_over_kappa;
  if (!(g > 0.0)) throw std::invalid_argument("gamma must be positive");
  const double s2 = std::sin(2.0 * mzi.omega);
  const double s4 = std::sin(4.0 * mzi.omega);
  const double c4 = std::cos(4.0 * mzi.omega);
  const double cp = std::cos(mzi.phi);
  const double c2p = std::cos(2.0 * mzi.phi);
  const double num = 8.0 * g * g * g +
                     16.0 * g * g * (s2 * s2 * c2p + 2.0 * s4 * cp) +
                     44.0 * g * g +
                     (2.0 * g * (2.0 * g * (5.0 - 2.0 * g) + 5.0) - 3.0) * c4 +
                     38.0 * g + 3.0;
  const double den =
      4.0 * (2.0 * g + 1.0) * (2.0 * g + 1.0) * (2.0 * g + 3.0);
  return num / den;
}

double splitting_efficiency_analytic_entangled(double gamma_over_kappa,
                                               double delta, double omega) {
  const double g = gamma_over_kappa;
  const double d = delta;
  if (!(g > 0.0)) throw std::invalid_argument("gamma must be positive");
  if (!(d >= 0.0)) throw std::invalid_argument("delta must be nonnegative");
  const double s4 = std::sin(4.0 * omega);
  const double c4 = std::cos(4.0 * omega);
  const double num =
      32.0 * g * g * (2.0 * g + 2.0 * d + 3.0) * s4 +
      (-4.0 * g *
           (4.0 * g * (g * g + g - 2.0) + 2.0 * g * (2.0 * g - 3.0) * d -
            5.0 * d - 7.0) -
       6.0 * d - 3.0) *
          c4 +
      4.0 * g *
          (2.0 * g * (2.0 * g + 13.0) * d + 4.0 * g * (g * (g + 5.0) + 8.0) +
           19.0 * d + 17.0) +
      6.0 * d + 3.0;
  const double den = 4.0 * (2.0 * g + 1.0) * (2.0 * g + 1.0) *
                     (2.0 * g + 3.0) * (2.0 * g + 2.0 * d + 1.0);
  return num / den;
}

}  // namespace psplit
