#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "circe/algebra.hpp"

namespace circe {

/// Power series in an expansion variable u, known exactly through u^cap.
///
/// Powers above the cap are unknown rather than zero: coefficient() refuses to
/// answer for them, and binary operations keep the smaller of the two caps.
template <typename Coeff>
class TruncatedSeries {
 public:
  using coefficient_type = Coeff;

  explicit TruncatedSeries(int cap) : cap_(check_cap(cap)), terms_(cap_ + 1) {}
  TruncatedSeries(int cap, std::vector<Coeff> terms) : cap_(check_cap(cap)), terms_(std::move(terms)) {
    if (terms_.size() > static_cast<std::size_t>(cap_) + 1) {
      throw std::invalid_argument("series terms exceed the order cap");
    }
    terms_.resize(cap_ + 1);
  }

  static TruncatedSeries one(int cap) {
    TruncatedSeries s(cap);
    s.terms_[0] = unit();
    return s;
  }
  static TruncatedSeries monomial(int cap, int power, const Coeff& value) {
    TruncatedSeries s(cap);
    s.add_term(power, value);
    return s;
  }

  int cap() const { return cap_; }

  const Coeff& coefficient(int power) const {
    if (power < 0 || power > cap_) {
      throw std::out_of_range("coefficient u^" + std::to_string(power) +
                              " lies beyond the series order cap " + std::to_string(cap_));
    }
    return terms_[power];
  }

  void add_term(int power, const Coeff& value) {
    if (power < 0 || power > cap_) {
      throw std::out_of_range("term u^" + std::to_string(power) + " beyond order cap");
    }
    terms_[power] = Coeff(terms_[power] + value);
  }

  bool is_zero() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Coeff& c) { return is_zero_coeff(c); });
  }

  std::optional<int> lowest_nonzero_power() const {
    for (int k = 0; k <= cap_; ++k) {
      if (!is_zero_coeff(terms_[k])) return k;
    }
    return std::nullopt;
  }

  /// Same series with a smaller cap.
  TruncatedSeries truncated(int cap) const {
    if (cap > cap_) throw std::invalid_argument("cannot raise a series cap");
    return TruncatedSeries(cap, std::vector<Coeff>(terms_.begin(), terms_.begin() + cap + 1));
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    lower_cap(o.cap_);
    for (int k = 0; k <= cap_; ++k) terms_[k] = Coeff(terms_[k] + o.terms_[k]);
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    lower_cap(o.cap_);
    for (int k = 0; k <= cap_; ++k) terms_[k] = Coeff(terms_[k] - o.terms_[k]);
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  /// Cauchy product, truncated at the smaller cap.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.cap_, b.cap_));
    for (int i = 0; i <= out.cap_; ++i) {
      if (is_zero_coeff(a.terms_[i])) continue;
      for (int j = 0; i + j <= out.cap_; ++j) {
        out.terms_[i + j] = Coeff(out.terms_[i + j] + a.terms_[i] * b.terms_[j]);
      }
    }
    return out;
  }

  TruncatedSeries scaled(const BigRational& c) const {
    TruncatedSeries out(*this);
    for (auto& t : out.terms_) t = Coeff(t * c);
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
    return os << s.to_string() << " (cap " << s.cap_ << ")";
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.cap_ == b.cap_ && a.terms_ == b.terms_;
  }

  /// "u + 0u^2 + 0u^3": every power from the lowest nonzero one through the cap.
  std::string to_string(std::string_view var = "u", std::string_view coeff_var = "M") const {
    auto first = lowest_nonzero_power();
    if (!first) return "0";
    std::string out;
    for (int k = *first; k <= cap_; ++k) {
      auto [negative, body] = term_text(terms_[k], coeff_var);
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      out += body;
      if (k > 0) {
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
      if (k == 0 && body.empty()) out += "1";
    }
    return out;
  }

 private:
  static int check_cap(int cap) {
    if (cap < 0) throw std::invalid_argument("series order cap must be non-negative");
    return cap;
  }

  void lower_cap(int cap) {
    if (cap < cap_) {
      cap_ = cap;
      terms_.resize(cap_ + 1);
    }
  }

  static Coeff unit() {
    if constexpr (std::is_same_v<Coeff, BigRational>) {
      return BigRational(1);
    } else {
      return Coeff::constant(BigRational(1));
    }
  }

  static bool is_zero_coeff(const BigRational& c) { return c == 0; }
  static bool is_zero_coeff(const MPolynomial& c) { return c.is_zero(); }

  // Returns sign and the coefficient text, with unit coefficients left empty.
  static std::pair<bool, std::string> term_text(const BigRational& c, std::string_view) {
    if (c == 0) return {false, "0"};
    BigRational a = c < 0 ? BigRational(-c) : c;
    if (a == 1) return {c < 0, ""};
    std::string t = circe::to_string(a);
    if (a.get_den() != 1) t = "(" + t + ")";
    return {c < 0, t};
  }
  static std::pair<bool, std::string> term_text(const MPolynomial& c, std::string_view var) {
    if (c.is_zero()) return {false, "0"};
    return {false, "(" + c.to_string(var) + ")"};
  }

  int cap_;
  std::vector<Coeff> terms_;
};

using RationalSeries = TruncatedSeries<BigRational>;
using MSeries = TruncatedSeries<MPolynomial>;

}  // namespace circe
