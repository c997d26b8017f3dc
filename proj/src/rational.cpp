#include "hw/rational.hpp"

#include <stdexcept>

namespace hw {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("division by zero");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::to_string() const { return value_.get_str(); }

namespace {

BigInt parse_int(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9')
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return BigInt(digits, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

LinForm LinForm::symbol(std::size_t index) {
  LinForm f;
  f.coeffs_.emplace(index, Rational(1));
  return f;
}

Rational LinForm::coefficient(std::size_t index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? Rational() : it->second;
}

LinForm LinForm::operator-() const {
  LinForm r;
  r.constant_ = -constant_;
  for (const auto& [j, q] : coeffs_) r.coeffs_.emplace_hint(r.coeffs_.end(), j, -q);
  return r;
}

LinForm& LinForm::operator+=(const LinForm& o) {
  constant_ += o.constant_;
  for (const auto& [j, q] : o.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(j, q);
    if (!inserted) {
      it->second += q;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  return *this;
}

LinForm& LinForm::operator*=(const Rational& s) {
  if (s.is_zero()) {
    *this = LinForm();
    return *this;
  }
  constant_ *= s;
  for (auto& [j, q] : coeffs_) q *= s;
  return *this;
}

std::string LinForm::to_string() const {
  std::string out;
  auto term = [&out](const Rational& q, const std::string& sym) {
    const bool neg = q.sign() < 0;
    const Rational mag = neg ? -q : q;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (sym.empty()) {
      out += mag.to_string();
    } else {
      if (mag != Rational(1)) out += mag.to_string() + "*";
      out += sym;
    }
  };
  for (const auto& [j, q] : coeffs_) term(q, "d" + std::to_string(j));
  if (!constant_.is_zero() || out.empty()) term(constant_, "");
  return out;
}

LinForm lf_affine_apply(int sign, const LinForm& f, const LinForm& g) {
  LinForm r = sign < 0 ? -f : f;
  r += g;
  return r;
}

}  // namespace hw
