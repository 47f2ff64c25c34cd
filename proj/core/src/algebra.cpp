#include "circe/algebra.hpp"

#include <stdexcept>

namespace circe {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const BigRational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigInt parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("not an integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

BigRational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text));
  return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

BigRational pow(const BigRational& base, unsigned exponent) {
  BigRational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

namespace detail {

bool is_plain_integer(const BigRational& value) { return value.get_den() == 1; }

std::string coefficient_text(const BigRational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  if (c < 0) return "-(" + to_string(BigRational(-c)) + ")";
  return "(" + to_string(c) + ")";
}

std::string format_term(const std::string& coefficient, bool is_one, std::size_t power,
                        std::string_view var) {
  if (power == 0) return coefficient;
  std::string out = is_one ? std::string() : coefficient;
  out += var;
  if (power > 1) out += "^" + std::to_string(power);
  return out;
}

}  // namespace detail

}  // namespace circe
