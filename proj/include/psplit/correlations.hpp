#pragma once

#include "psplit/interferometer.hpp"
#include "psplit/model.hpp"
#include "psplit/propagator.hpp"

#include <cstdint>
#include <unordered_map>

namespace psplit {

// Two-time detection density: first photon in `first` at t, second photon in
// `second` a delay tau later,
//   Gamma(t, tau) = || J_second exp(-K tau) J_first exp(-K t) |initial> ||^2.
double gamma_numeric(const SystemParams& params, const MziParams& mzi,
                     Port first, Port second, const Vector& initial, double t,
                     double tau);

enum class Direction { CD, DC };

// Closed-form counterpart for the unentangled system (kappa = 1).
double gamma_analytic(double gamma, const MziParams& mzi, Direction direction,
                      double t, double tau);

// Shared operator setup plus propagator memoization for integrating the
// detection density over many (t, tau) points.  The caches are keyed by the
// time value, so instances are cheap to reuse but NOT safe to share between
// threads; create one evaluator per thread.
class CorrelationEvaluator {
 public:
  CorrelationEvaluator(const SystemParams& params, const MziParams& mzi);

  const BasisDescriptor& basis() const { return basis_; }
  const Matrix& generator() const { return generator_; }
  const OutputJumps& output_jumps() const { return out_; }
  const Vector& initial_state() const { return initial_; }

  // One-off evaluation for an arbitrary normalized initial state.
  double evaluate(Port first, Port second, const Vector& initial, double t,
                  double tau) const;

  // Memoized pipeline on the standard pair state.
  const Vector& evolved_initial(double t) const;      // exp(-K t) |pair>
  Vector after_first_jump(Port first, double t) const;
  // || J_second exp(-K tau) w ||^2 with J_second exp(-K tau) cached per tau.
  double second_detection_density(Port second, const Vector& w,
                                  double tau) const;

 private:
  BasisDescriptor basis_;
  Matrix generator_;
  OutputJumps out_;
  Vector initial_;
  mutable std::unordered_map<std::uint64_t, Vector> evolved_;
  mutable std::unordered_map<std::uint64_t, Matrix> port_propagator_[2];
  mutable Vector scratch_;
};

}  // namespace psplit
