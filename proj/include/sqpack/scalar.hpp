#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sqpack {

// Exact rational coordinate type. GMP keeps every value in canonical
// reduced form with a positive denominator.
using Scalar = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

// Raised when a checked geometric or analytical invariant does not hold.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Parses "p/q", "p" or a finite decimal such as "0.125" into an exact value.
Scalar parse_scalar(std::string_view text);

// Always emits "p/q" (an integer n is written "n/1").
std::string to_fraction(const Scalar& v);

// Short human form: "n" for integers, "p/q" otherwise.
std::string to_string(const Scalar& v);

double to_double(const Scalar& v);

inline Scalar make_scalar(long num, long den = 1) { return Scalar(num) / Scalar(den); }

// 2^-k
Scalar dyadic(int k);

}  // namespace sqpack
