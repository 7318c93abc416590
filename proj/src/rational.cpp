#include "rational.hpp"

#include <cctype>
#include <cstddef>

#include "errors.hpp"

namespace mcg {

Rational make_rational(long num, long den) {
  if (den == 0) throw input_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = (s[0] == '-');
    s = s.substr(1);
  }
  if (s.empty()) throw input_error("empty rational literal: '" + text + "'");

  std::string num_part = s;
  std::string den_part;
  bool decimal = false;
  std::size_t slash = s.find('/');
  std::size_t dot = s.find('.');
  if (slash != std::string::npos && dot != std::string::npos)
    throw input_error("malformed rational literal: '" + text + "'");
  if (slash != std::string::npos) {
    num_part = s.substr(0, slash);
    den_part = s.substr(slash + 1);
  } else if (dot != std::string::npos) {
    decimal = true;
    num_part = s.substr(0, dot);
    den_part = s.substr(dot + 1);
  }

  if (!all_digits(num_part) || ((slash != std::string::npos || decimal) && !all_digits(den_part)))
    throw input_error("malformed rational literal: '" + text + "'");

  Rational value;
  if (decimal) {
    mpz_class scale = 1;
    for (std::size_t i = 0; i < den_part.size(); ++i) scale *= 10;
    mpz_class units(num_part);
    mpz_class frac(den_part);
    value = Rational(units * scale + frac, scale);
  } else if (slash != std::string::npos) {
    mpz_class den(den_part);
    if (den == 0) throw input_error("zero denominator in rational literal: '" + text + "'");
    value = Rational(mpz_class(num_part), den);
  } else {
    value = Rational(mpz_class(num_part));
  }
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string rational_to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

} // namespace mcg
