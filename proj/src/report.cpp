#include "sqpack/report.hpp"

#include <algorithm>

namespace sqpack {

std::string format_check(const CheckLine& c) {
  return "CHECK " + c.name + (c.pass ? " PASS " : " FAIL ") + c.lhs + " " + c.cmp + " " + c.rhs;
}

CheckLine check_le(std::string name, const Scalar& lhs, const Scalar& rhs) {
  return {std::move(name), lhs <= rhs, to_fraction(lhs), "<=", to_fraction(rhs)};
}

CheckLine check_ge(std::string name, const Scalar& lhs, const Scalar& rhs) {
  return {std::move(name), lhs >= rhs, to_fraction(lhs), ">=", to_fraction(rhs)};
}

CheckLine check_eq(std::string name, const Scalar& lhs, const Scalar& rhs) {
  return {std::move(name), lhs == rhs, to_fraction(lhs), "==", to_fraction(rhs)};
}

bool all_pass(const std::vector<CheckLine>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.pass; });
}

const CheckLine* first_failure(const std::vector<CheckLine>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

}  // namespace sqpack
