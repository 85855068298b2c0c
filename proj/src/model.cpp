#include "psplit/model.hpp"

#include <cmath>

namespace psplit {

namespace {

int fock_of(int index) { return (index % 6) / 2; }
bool atom_excited(int index) { return index % 2 == 1; }
bool source_excited(int index) { return index >= 6; }

}  // namespace

void SystemParams::validate() const {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  if (!(delta >= 0.0)) throw std::invalid_argument("delta must be nonnegative");
  if (!(chi >= 0.0)) throw std::invalid_argument("chi must be nonnegative");
}

int BasisDescriptor::index_of(std::string_view label) const {
  for (int i = 0; i < dimension; ++i)
    if (labels[static_cast<size_t>(i)] == label) return i;
  throw std::invalid_argument("unknown basis label: " + std::string(label));
}

int BasisDescriptor::excitation(int index) const {
  if (index < 0 || index >= dimension) throw std::out_of_range("basis index");
  return 2 * (source_excited(index) ? 1 : 0) + fock_of(index) +
         (atom_excited(index) ? 1 : 0);
}

BasisDescriptor build_basis(SystemKind kind) {
  BasisDescriptor basis;
  basis.kind = kind;
  const int source_states = kind == SystemKind::Entangled ? 2 : 1;
  for (int q = 0; q < source_states; ++q)
    for (int n = 0; n <= 2; ++n)
      for (int s = 0; s < 2; ++s) {
        std::string label;
        if (kind == SystemKind::Entangled) label += q ? 'e' : 'g';
        label += static_cast<char>('0' + n);
        label += s ? 'e' : 'g';
        basis.labels.push_back(label);
      }
  basis.dimension = static_cast<int>(basis.labels.size());
  return basis;
}

Matrix feeder_annihilation(const BasisDescriptor& basis) {
  Matrix op = Matrix::Zero(basis.dimension, basis.dimension);
  for (int j = 0; j < basis.dimension; ++j) {
    const int n = fock_of(j);
    if (n > 0) op(j - 2, j) = std::sqrt(static_cast<double>(n));
  }
  return op;
}

Matrix atom_lowering(const BasisDescriptor& basis) {
  Matrix op = Matrix::Zero(basis.dimension, basis.dimension);
  for (int j = 0; j < basis.dimension; ++j)
    if (atom_excited(j)) op(j - 1, j) = 1.0;
  return op;
}

Matrix source_lowering(const BasisDescriptor& basis) {
  if (basis.kind != SystemKind::Entangled)
    throw std::logic_error("source operator requires the entangled basis");
  Matrix op = Matrix::Zero(basis.dimension, basis.dimension);
  for (int j = 6; j < basis.dimension; ++j) op(j - 6, j) = 1.0;
  return op;
}

Matrix excitation_operator(const BasisDescriptor& basis) {
  Matrix op = Matrix::Zero(basis.dimension, basis.dimension);
  for (int i = 0; i < basis.dimension; ++i) op(i, i) = basis.excitation(i);
  return op;
}

Vector basis_state(const BasisDescriptor& basis, std::string_view label) {
  Vector state = Vector::Zero(basis.dimension);
  state(basis.index_of(label)) = 1.0;
  return state;
}

Vector initial_pair_state(const BasisDescriptor& basis) {
  return basis_state(basis,
                     basis.kind == SystemKind::Entangled ? "e0g" : "2g");
}

Matrix build_generator(const SystemParams& params) {
  params.validate();
  const BasisDescriptor basis = build_basis(params.kind);
  const Matrix a = feeder_annihilation(basis);
  const Matrix sigma = atom_lowering(basis);
  Matrix k = kKappa * a.adjoint() * a +
             2.0 * params.gamma * sigma.adjoint() * sigma +
             2.0 * std::sqrt(kKappa * params.gamma) * sigma.adjoint() * a;
  if (params.kind == SystemKind::Entangled) {
    const Matrix source = source_lowering(basis);
    k += 2.0 * params.delta * source.adjoint() * source +
         2.0 * std::sqrt(2.0 * params.chi * params.delta) *
             a.adjoint() * a.adjoint() * source;
  }
  return k;
}

const Matrix& JumpOperators::source_channel() const {
  if (!s_out) throw std::logic_error("no source channel for the unentangled kind");
  return *s_out;
}

JumpOperators build_jump_operators(const SystemParams& params,
                                   CollapseAtomRate atom_rate) {
  params.validate();
  const BasisDescriptor basis = build_basis(params.kind);
  const Matrix a = feeder_annihilation(basis);
  const Matrix sigma = atom_lowering(basis);
  const double atom_coef = atom_rate == CollapseAtomRate::SqrtTwoGamma
                               ? std::sqrt(2.0 * params.gamma)
                               : std::sqrt(2.0 * kKappa);
  JumpOperators jumps;
  jumps.a_out = atom_coef * sigma + std::sqrt(2.0 * kKappa) * a;
  jumps.b_out = atom_coef * sigma;
  if (params.kind == SystemKind::Entangled) {
    const Matrix source = source_lowering(basis);
    jumps.s_out = 2.0 * std::sqrt(params.delta) * source +
                  std::sqrt(2.0 * params.chi) * a * a;
  }
  return jumps;
}

ExcitationRange excitation_range(const BasisDescriptor& basis,
                                 const Vector& state) {
  if (state.size() != basis.dimension)
    throw std::invalid_argument("state dimension does not match basis");
  const double norm = state.norm();
  if (norm == 0.0) throw std::invalid_argument("state is the zero vector");
  const double threshold = 1e-12 * norm;
  ExcitationRange range{basis.dimension, -1};
  for (int i = 0; i < basis.dimension; ++i) {
    if (std::abs(state(i)) <= threshold) continue;
    const int n = basis.excitation(i);
    range.min_n = std::min(range.min_n, n);
    range.max_n = std::max(range.max_n, n);
  }
  if (range.max_n < 0) throw std::invalid_argument("state is numerically zero");
  return range;
}

}  // namespace psplit
