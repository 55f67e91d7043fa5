#pragma once

#include "sqpack/scalar.hpp"

#include <string>
#include <vector>

namespace sqpack {

// One line of a textual analysis report:
//   CHECK <name> PASS|FAIL <lhs> <cmp> <rhs>
struct CheckLine {
  std::string name;
  bool pass = false;
  std::string lhs;
  std::string cmp;
  std::string rhs;
};

std::string format_check(const CheckLine& c);

// Exact comparisons; values are printed as fractions.
CheckLine check_le(std::string name, const Scalar& lhs, const Scalar& rhs);
CheckLine check_ge(std::string name, const Scalar& lhs, const Scalar& rhs);
CheckLine check_eq(std::string name, const Scalar& lhs, const Scalar& rhs);

bool all_pass(const std::vector<CheckLine>& checks);
// First failing check, or nullptr.
const CheckLine* first_failure(const std::vector<CheckLine>& checks);

}  // namespace sqpack
