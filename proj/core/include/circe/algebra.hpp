#pragma once

// Exact scalars and dense univariate polynomials.
//
// BigInt / BigRational are GMP values; mpq_class keeps itself in lowest terms
// with a positive denominator after every arithmetic operation, provided the
// inputs are canonical. make_rational() is the only sanctioned way to build a
// rational from an arbitrary numerator/denominator pair.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace circe {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Reduced num/den. Throws std::domain_error on a zero denominator.
BigRational make_rational(const BigInt& num, const BigInt& den);

std::string to_string(const BigInt& value);
/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const BigRational& value);

/// Decimal integer with optional sign. Throws std::invalid_argument.
BigInt parse_integer(std::string_view text);
/// "p" or "p/q". Throws std::invalid_argument or std::domain_error.
BigRational parse_rational(std::string_view text);

BigRational pow(const BigRational& base, unsigned exponent);

namespace detail {
std::string format_term(const std::string& coefficient, bool is_one, std::size_t power,
                        std::string_view var);
bool is_plain_integer(const BigRational& value);
inline std::string coefficient_text(const BigInt& c) { return c.get_str(); }
std::string coefficient_text(const BigRational& c);
}  // namespace detail

/// Dense polynomial, index = power. Canonical: no trailing zero coefficients,
/// so the zero polynomial has an empty coefficient vector.
template <typename Coeff>
class Polynomial {
 public:
  using coefficient_type = Coeff;

  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coefficients) : c_(std::move(coefficients)) {
    trim();
  }
  Polynomial(std::initializer_list<Coeff> coefficients) : c_(coefficients) { trim(); }

  static Polynomial constant(const Coeff& value) { return Polynomial({value}); }
  static Polynomial monomial(const Coeff& value, std::size_t power) {
    std::vector<Coeff> c(power + 1);
    c[power] = value;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Coeff>& coefficients() const { return c_; }

  Coeff coefficient(std::size_t power) const {
    return power < c_.size() ? c_[power] : Coeff(0);
  }
  Coeff leading_coefficient() const { return c_.empty() ? Coeff(0) : c_.back(); }

  /// Horner evaluation in any ring that accepts Coeff.
  template <typename X>
  X evaluate(const X& x) const {
    X acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = X(acc * x);
      acc = X(acc + X(*it));
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& other) {
    if (other.c_.size() > c_.size()) c_.resize(other.c_.size());
    for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& other) {
    if (other.c_.size() > c_.size()) c_.resize(other.c_.size());
    for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] -= other.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
  }
  Polynomial& operator*=(const Coeff& scalar) {
    for (auto& c : c_) c *= scalar;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
  friend Polynomial operator*(const Coeff& s, Polynomial a) { return a *= s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Highest power first, e.g. "2d^3+4d^2+10d+8". Non-integer rational
  /// coefficients are parenthesised: "(3/2)M^2".
  std::string to_string(std::string_view var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k] == 0) continue;
      std::string text = detail::coefficient_text(c_[k]);
      bool negative = !text.empty() && text.front() == '-';
      if (negative) text.erase(0, 1);
      if (!out.empty()) out += negative ? "-" : "+";
      else if (negative) out += "-";
      out += detail::format_term(text, text == "1", k, var);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

/// Integer polynomial in the formal matrix dimension d.
using DimPolynomial = Polynomial<BigInt>;
/// Rational polynomial in the block size M.
using MPolynomial = Polynomial<BigRational>;

inline MPolynomial to_rational(const DimPolynomial& p) {
  std::vector<BigRational> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) c.emplace_back(v);
  return MPolynomial(std::move(c));
}

}  // namespace circe
