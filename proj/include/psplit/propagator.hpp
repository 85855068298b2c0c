#pragma once

#include "psplit/model.hpp"

namespace psplit {

// exp(-K t).  Evaluated by Pade scaling-and-squaring, which stays accurate at
// the 2*gamma == kappa exceptional point where K is defective.
Matrix propagator_matrix(const Matrix& generator, double t);

Vector propagate(const Matrix& generator, const Vector& state, double t);

// Closed-form no-detection amplitudes of the unentangled system (kappa = 1):
//   alpha(t): |2g> survival          beta(t): |2g> -> |1e> transfer
//   a(t):     |1g> survival          b(t):    |1g> -> |0e> transfer
//   c(t):     |0e> survival
// Near 2*gamma == kappa the transfer amplitudes switch to their confluent
// limits -2*sqrt(2*gamma)*t*exp(-2t) and -2*sqrt(gamma)*t*exp(-t).
struct AmplitudeKernel {
  double alpha = 0.0;
  double beta = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

AmplitudeKernel closed_form_amplitudes(double gamma, double t);

}  // namespace psplit
