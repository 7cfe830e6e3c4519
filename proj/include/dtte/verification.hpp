#pragma once

// The identity suite behind `dtte verify`.

#include <cstdint>
#include <string>
#include <vector>

#include "dtte/ideal_repr.hpp"

namespace dtte {

struct CheckResult {
  std::string name;
  double deviation = 0.0;
  double threshold = 0.0;
  bool exact = false;  // integer-sign check: passes only at deviation 0
  bool pass = false;
};

struct VerifyConfig {
  RealMatrix4 tetrad = identity_matrix4();
  double tolerance = 1e-10;
  std::uint64_t seed = 0;
};

// Exact checks pass at deviation == 0; tolerance checks pass when
// deviation < tolerance.
std::vector<CheckResult> run_verification_suite(const VerifyConfig& cfg);

}  // namespace dtte
