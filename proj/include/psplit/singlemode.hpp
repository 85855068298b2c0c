#pragma once

#include "psplit/interferometer.hpp"
#include "psplit/model.hpp"

namespace psplit {

// Two photons in a single temporal mode of the interferometer's input pair:
// amplitudes on |11>, |20>, |02> (photon counts in the first/second mode).
struct TwoPhotonState {
  Complex d{};  // |11>
  Complex e{};  // |20>
  Complex f{};  // |02>

  double norm() const;
  void validate() const;  // throws std::invalid_argument unless norm = 1
};

// Image of the state after the interferometer, in the output mode pair.
// The map is unitary on the three-state space, so norm is preserved.
TwoPhotonState transform_two_photon(const TwoPhotonState& state,
                                    const MziParams& mzi);

// |11> output amplitude for the balanced input d|11> + g(|20>-|02>)/sqrt(2):
// e^{i phi} (d cos(2 omega) + g sin(2 omega) cos(phi)).  Requires
// |d|^2 + |g|^2 = 1.
Complex amplitude_11(Complex d, Complex g, const MziParams& mzi);

// Maximum of |amplitude_11|^2 over omega and phi:
// 1/2 + sqrt(x^2 + y^2)/2 with x = |d|^2 - |g|^2 and y = 2 Re(d conj(g)).
// Reaches 1 exactly when d and g share a phase.
double s_max(Complex d, Complex g);

// Best split probability when the |02> amplitude is forced to zero (an
// antibunched second input mode): (1 + |d|^2)/2, below 1 for |d| < 1.
double antibunched_split_bound(double abs_d);

}  // namespace psplit
