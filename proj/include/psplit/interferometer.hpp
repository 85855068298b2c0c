#pragma once

#include "psplit/model.hpp"

namespace psplit {

enum class Port { C, D };

// Two-mode mixing unitary applied behind the splitter:
//   c = e^{i phi} sin(w) a + cos(w) b
//   d = e^{i phi} cos(w) a - sin(w) b
// omega = 0 routes a->d, b->c (a pure relabeling of the bare ports).
Eigen::Matrix2cd mzi_matrix(const MziParams& mzi);

struct OutputJumps {
  Matrix c_out;
  Matrix d_out;

  const Matrix& port(Port p) const { return p == Port::C ? c_out : d_out; }
};

OutputJumps output_jump_operators(const MziParams& mzi, const Matrix& a_out,
                                  const Matrix& b_out);

}  // namespace psplit
