#pragma once

#include "psplit/model.hpp"

#include <string>
#include <vector>

namespace psplit {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  // Atom collapse-operator coefficient for the reflected port.  The
  // SqrtTwoKappa variant deliberately breaks detection-channel completeness
  // and must make that check fail; it exists as a diagnostic.
  CollapseAtomRate atom_rate = CollapseAtomRate::SqrtTwoGamma;
  double tol = 1e-7;  // quadrature tolerance for the numeric checks
  double chi = 1e-3;  // source-emission strength for the residual check

  void validate() const;  // throws std::invalid_argument
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool all_passed() const;
};

// Invariant suite spanning every layer: operator algebra, detection-channel
// completeness, probability normalization, closed-form/numeric agreement,
// periodicity, and the single-mode interference oracles.
VerifyReport run_verification(const VerifyOptions& options = {});

}  // namespace psplit
