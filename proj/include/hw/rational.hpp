#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hw {

using BigInt = mpz_class;

/// Exact rational number in canonical form: reduced, positive denominator,
/// zero stored as 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : value_(value) {}
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "p/q" or "p". Throws std::invalid_argument on malformed text.
  static Rational parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Largest integer not exceeding the value.
  BigInt floor() const;

  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.to_string();
  }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

/// Builds num/den in lowest terms. Throws std::domain_error("division by zero")
/// when den is zero.
Rational rational(const BigInt& num, const BigInt& den);

/// Formal affine-linear form c + sum_j q_j * d_j over the symbols d_0, d_1, ...
/// Zero coefficients are never stored, so equality is structural.
class LinForm {
 public:
  LinForm() = default;
  LinForm(Rational constant) : constant_(std::move(constant)) {}  // NOLINT

  /// The form 1 * d_index.
  static LinForm symbol(std::size_t index);

  const Rational& constant() const { return constant_; }
  const std::map<std::size_t, Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t index) const;

  bool is_zero() const { return constant_.is_zero() && coeffs_.empty(); }

  /// Substitutes values[j] for d_j. Missing symbols throw std::out_of_range.
  template <class Values>
  Rational substitute(const Values& values) const {
    Rational r = constant_;
    for (const auto& [j, q] : coeffs_) r += q * Rational(values.at(j));
    return r;
  }

  std::string to_string() const;

  LinForm operator-() const;
  LinForm& operator+=(const LinForm& o);
  LinForm& operator-=(const LinForm& o) { return *this += -o; }
  LinForm& operator*=(const Rational& s);

  friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
  friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
  friend LinForm operator*(const Rational& s, LinForm f) { return f *= s; }

  friend bool operator==(const LinForm&, const LinForm&) = default;

  friend std::ostream& operator<<(std::ostream& os, const LinForm& f) {
    return os << f.to_string();
  }

 private:
  Rational constant_;
  std::map<std::size_t, Rational> coeffs_;
};

/// sign * f + g: the translation update when composing in E(1).
LinForm lf_affine_apply(int sign, const LinForm& f, const LinForm& g);

}  // namespace hw
