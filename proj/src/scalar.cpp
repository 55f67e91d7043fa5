#include "sqpack/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace sqpack {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  std::string text_digits(s);
  text_digits.erase(0, std::min(text_digits.find_first_not_of('0'), text_digits.size()));
  BigInt v{text_digits.empty() ? std::string("0") : text_digits};
  return neg ? BigInt(-v) : v;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Scalar(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool neg = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      neg = whole.front() == '-';
      whole.remove_prefix(1);
    }
    if (whole.empty() && frac.empty()) throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    // Leading zeros would make the string parse as octal.
    std::string text_digits = std::string(whole) + std::string(frac);
    text_digits.erase(0, std::min(text_digits.find_first_not_of('0'), text_digits.size()));
    BigInt digits{text_digits.empty() ? std::string("0") : text_digits};
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    Scalar v(digits, scale);
    return neg ? Scalar(-v) : v;
  }

  return Scalar(parse_integer(text));
}

std::string to_fraction(const Scalar& v) {
  return numerator(v).str() + "/" + denominator(v).str();
}

std::string to_string(const Scalar& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return to_fraction(v);
}

double to_double(const Scalar& v) { return v.convert_to<double>(); }

Scalar dyadic(int k) {
  if (k < 0) throw std::invalid_argument("dyadic: negative exponent");
  BigInt den = BigInt(1) << k;
  return Scalar(BigInt(1), den);
}

}  // namespace sqpack
