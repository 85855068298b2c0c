#include "psplit/correlations.hpp"

#include <bit>
#include <cmath>

namespace psplit {

namespace {

std::uint64_t key_of(double t) { return std::bit_cast<std::uint64_t>(t); }

// Bounds the per-port propagator memo (entries are dim x dim complex); past
// the cap, rare delay points are recomputed instead of cached.
constexpr std::size_t kMaxCachedPropagators = 30000;

}  // namespace

CorrelationEvaluator::CorrelationEvaluator(const SystemParams& params,
                                           const MziParams& mzi)
    : basis_(build_basis(params.kind)),
      generator_(build_generator(params)),
      initial_(initial_pair_state(basis_)) {
  const JumpOperators jumps = build_jump_operators(params);
  out_ = output_jump_operators(mzi, jumps.a_out, jumps.b_out);
  scratch_ = Vector::Zero(basis_.dimension);
}

double CorrelationEvaluator::evaluate(Port first, Port second,
                                      const Vector& initial, double t,
                                      double tau) const {
  if (initial.size() != basis_.dimension)
    throw std::invalid_argument("initial state dimension does not match basis");
  if (std::abs(initial.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("initial state must be normalized");
  const Vector mid = out_.port(first) * propagate(generator_, initial, t);
  const Vector end = out_.port(second) * propagate(generator_, mid, tau);
  return end.squaredNorm();
}

const Vector& CorrelationEvaluator::evolved_initial(double t) const {
  const auto key = key_of(t);
  auto it = evolved_.find(key);
  if (it == evolved_.end())
    it = evolved_.emplace(key, propagate(generator_, initial_, t)).first;
  return it->second;
}

Vector CorrelationEvaluator::after_first_jump(Port first, double t) const {
  return out_.port(first) * evolved_initial(t);
}

double CorrelationEvaluator::second_detection_density(Port second,
                                                      const Vector& w,
                                                      double tau) const {
  auto& cache = port_propagator_[second == Port::C ? 0 : 1];
  const auto key = key_of(tau);
  auto it = cache.find(key);
  if (it == cache.end()) {
    if (cache.size() >= kMaxCachedPropagators) {
      scratch_.noalias() =
          out_.port(second) * (propagator_matrix(generator_, tau) * w);
      return scratch_.squaredNorm();
    }
    it = cache.emplace(key,
                       out_.port(second) * propagator_matrix(generator_, tau))
             .first;
  }
  scratch_.noalias() = it->second * w;
  return scratch_.squaredNorm();
}

double gamma_numeric(const SystemParams& params, const MziParams& mzi,
                     Port first, Port second, const Vector& initial, double t,
                     double tau) {
  if (!(t >= 0.0) || !(tau >= 0.0))
    throw std::invalid_argument("detection times must be nonnegative");
  const CorrelationEvaluator evaluator(params, mzi);
  return evaluator.evaluate(first, second, initial, t, tau);
}

double gamma_analytic(double gamma, const MziParams& mzi, Direction direction,
                      double t, double tau) {
  if (!(t >= 0.0) || !(tau >= 0.0))
    throw std::invalid_argument("detection times must be nonnegative");
  const AmplitudeKernel at = closed_form_amplitudes(gamma, t);
  const AmplitudeKernel atau = closed_form_amplitudes(gamma, tau);
  const Complex ep = std::exp(Complex(0.0, -mzi.phi));
  const double sw = std::sin(mzi.omega);
  const double cw = std::cos(mzi.omega);
  const double rg = std::sqrt(gamma);           // sqrt(kappa*gamma), kappa = 1
  const double r2k = std::sqrt(2.0 * kKappa);
  Complex amp;
  if (direction == Direction::CD) {
    amp = atau.c * ep * (ep * cw - sw) * sw * rg * at.beta +
          (atau.b * (ep * cw - sw) * rg + atau.a * cw * ep) *
              (ep * sw * r2k * at.alpha + (cw + ep * sw) * rg * at.beta);
  } else {
    amp = atau.c * cw * ep * (cw + ep * sw) * rg * at.beta +
          (atau.b * (cw + ep * sw) * rg + atau.a * ep * sw) *
              (cw * ep * r2k * at.alpha + (ep * cw - sw) * rg * at.beta);
  }
  return 4.0 * std::norm(amp);
}

}  // namespace psplit
