#include "psplit/interferometer.hpp"

#include <cmath>

namespace psplit {

Eigen::Matrix2cd mzi_matrix(const MziParams& mzi) {
  const Complex ep = std::exp(Complex(0.0, mzi.phi));
  const double sw = std::sin(mzi.omega);
  const double cw = std::cos(mzi.omega);
  Eigen::Matrix2cd u;
  u << ep * sw, cw, ep * cw, -sw;
  return u;
}

OutputJumps output_jump_operators(const MziParams& mzi, const Matrix& a_out,
                                  const Matrix& b_out) {
  if (a_out.rows() != b_out.rows() || a_out.cols() != b_out.cols())
    throw std::invalid_argument("port operators must share dimensions");
  const Eigen::Matrix2cd u = mzi_matrix(mzi);
  OutputJumps out;
  out.c_out = u(0, 0) * a_out + u(0, 1) * b_out;
  out.d_out = u(1, 0) * a_out + u(1, 1) * b_out;
  return out;
}

}  // namespace psplit
