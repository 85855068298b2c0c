#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace psplit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// All rates are expressed in units of the feeder-cavity half-width kappa,
// which is fixed to 1 throughout.
inline constexpr double kKappa = 1.0;

enum class SystemKind { Unentangled, Entangled };

struct SystemParams {
  double gamma = 1.0;  // enhanced atomic half-decay gamma/kappa, > 0
  double delta = 0.0;  // source-atom half-decay, >= 0 (entangled kind)
  double chi = 0.0;    // left-mirror bandwidth, > 0 for the entangled numeric path
  SystemKind kind = SystemKind::Unentangled;

  void validate() const;  // throws std::invalid_argument on out-of-range rates
};

struct MziParams {
  double omega = 0.0;  // amplitude splitting angle, radians
  double phi = 0.0;    // relative phase between the interferometer inputs, radians
};

// Composite basis: (source qubit for the entangled kind) x feeder Fock 0..2
// x two-level atom.  Label order is fixed and everything in this project
// relies on it:
//   unentangled: "0g","0e","1g","1e","2g","2e"      index = 2n + [atom e]
//   entangled:   "g0g".."g2e" then "e0g".."e2e"     index = 6[source e] + 2n + [atom e]
// Truncating the feeder at two photons is exact for the two-excitation
// initial states used here.
struct BasisDescriptor {
  SystemKind kind = SystemKind::Unentangled;
  int dimension = 0;
  std::vector<std::string> labels;

  int index_of(std::string_view label) const;  // throws on unknown label
  // Total excitation of a basis ket; an excited source counts as two photons.
  int excitation(int index) const;
};

BasisDescriptor build_basis(SystemKind kind);

// Ladder operators on the composite basis.
Matrix feeder_annihilation(const BasisDescriptor& basis);
Matrix atom_lowering(const BasisDescriptor& basis);
Matrix source_lowering(const BasisDescriptor& basis);  // entangled basis only
Matrix excitation_operator(const BasisDescriptor& basis);

Vector basis_state(const BasisDescriptor& basis, std::string_view label);
// Two-excitation start state: |2g> (unentangled) or |e0g> (entangled).
Vector initial_pair_state(const BasisDescriptor& basis);

// Generator K of the conditional no-detection evolution, H = -iK.
Matrix build_generator(const SystemParams& params);

// Coefficient convention for the atom term of the output collapse operators.
// SqrtTwoKappa breaks channel completeness against build_generator; it is
// retained only so the verification suite can demonstrate that failure.
enum class CollapseAtomRate { SqrtTwoGamma, SqrtTwoKappa };

struct JumpOperators {
  Matrix a_out;                 // transmitted-port collapse operator
  Matrix b_out;                 // atom (reflected) port collapse operator
  std::optional<Matrix> s_out;  // source-decay channel, entangled kind only

  const Matrix& source_channel() const;  // throws std::logic_error when absent
};

JumpOperators build_jump_operators(
    const SystemParams& params,
    CollapseAtomRate atom_rate = CollapseAtomRate::SqrtTwoGamma);

struct ExcitationRange {
  int min_n = 0;
  int max_n = 0;
};

// Excitation numbers present in the support of a nonzero state.
ExcitationRange excitation_range(const BasisDescriptor& basis, const Vector& state);

}  // namespace psplit
