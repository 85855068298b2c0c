#include "psplit/singlemode.hpp"

#include <cmath>
#include <stdexcept>

namespace psplit {

namespace {

constexpr double kNormTol = 1e-9;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

double TwoPhotonState::norm() const {
  return std::sqrt(std::norm(d) + std::norm(e) + std::norm(f));
}

void TwoPhotonState::validate() const {
  if (std::abs(norm() - 1.0) > kNormTol)
    throw std::invalid_argument("two-photon state must be normalized");
}

TwoPhotonState transform_two_photon(const TwoPhotonState& state,
                                    const MziParams& mzi) {
  state.validate();
  const double s = std::sin(mzi.omega);
  const double c = std::cos(mzi.omega);
  const double s2 = std::sin(2.0 * mzi.omega);
  const double c2 = std::cos(2.0 * mzi.omega);
  const Complex p1 = std::exp(Complex(0.0, mzi.phi));
  const Complex p2 = p1 * p1;  // the |20> image carries twice the input phase
  TwoPhotonState out;
  out.d = state.d * p1 * c2 + state.e * p2 * s2 * kInvSqrt2 -
          state.f * s2 * kInvSqrt2;
  out.e = state.d * p1 * s2 * kInvSqrt2 + state.e * p2 * (s * s) +
          state.f * (c * c);
  out.f = -state.d * p1 * s2 * kInvSqrt2 + state.e * p2 * (c * c) +
          state.f * (s * s);
  return out;
}

Complex amplitude_11(Complex d, Complex g, const MziParams& mzi) {
  if (std::abs(std::norm(d) + std::norm(g) - 1.0) > kNormTol)
    throw std::invalid_argument("balanced amplitudes must be normalized");
  const Complex phase = std::exp(Complex(0.0, mzi.phi));
  return phase * (d * std::cos(2.0 * mzi.omega) +
                  g * std::sin(2.0 * mzi.omega) * std::cos(mzi.phi));
}

double s_max(Complex d, Complex g) {
  if (std::abs(std::norm(d) + std::norm(g) - 1.0) > kNormTol)
    throw std::invalid_argument("balanced amplitudes must be normalized");
  const double x = std::norm(d) - std::norm(g);
  const double y = 2.0 * (d * std::conj(g)).real();
  return 0.5 + 0.5 * std::hypot(x, y);
}

double antibunched_split_bound(double abs_d) {
  if (!(abs_d >= 0.0) || !(abs_d <= 1.0))
    throw std::invalid_argument("|d| must lie in [0, 1]");
  return 0.5 * (1.0 + abs_d * abs_d);
}

}  // namespace psplit
