#include "hw/isometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace hw {

Sign sign_from_int(long v) {
  if (v == 1) return Sign::plus;
  if (v == -1) return Sign::minus;
  throw std::invalid_argument("sign must be +1 or -1, got " + std::to_string(v));
}

DiagIsometry::DiagIsometry(SignVector signs, Point translation)
    : signs_(std::move(signs)), translation_(std::move(translation)) {
  if (signs_.size() != translation_.size())
    throw std::invalid_argument("sign and translation lengths differ");
}

DiagIsometry DiagIsometry::identity(std::size_t dim) {
  return DiagIsometry(SignVector(dim, Sign::plus), Point(dim));
}

bool DiagIsometry::is_translation() const {
  return std::all_of(signs_.begin(), signs_.end(), [](Sign s) { return s == Sign::plus; });
}

bool DiagIsometry::is_identity() const {
  return is_translation() &&
         std::all_of(translation_.begin(), translation_.end(), [](const Rational& q) { return q.is_zero(); });
}

std::uint64_t DiagIsometry::sign_mask() const {
  if (signs_.size() > 64) throw std::length_error("sign mask supports at most 64 coordinates");
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < signs_.size(); ++j)
    if (signs_[j] == Sign::minus) mask |= std::uint64_t{1} << j;
  return mask;
}

std::string DiagIsometry::to_string() const {
  std::string s = "(diag(";
  for (std::size_t j = 0; j < dim(); ++j) s += (j ? "," : "") + std::to_string(to_int(signs_[j]));
  s += "), (";
  for (std::size_t j = 0; j < dim(); ++j) s += (j ? "," : "") + translation_[j].to_string();
  return s + "))";
}

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b)
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

DiagIsometry compose(const DiagIsometry& g, const DiagIsometry& h) {
  require_same_dim(g.dim(), h.dim());
  SignVector s(g.dim());
  Point t(g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) {
    s[j] = g.signs()[j] * h.signs()[j];
    t[j] = g.signs()[j] == Sign::plus ? g.translation()[j] + h.translation()[j]
                                      : g.translation()[j] - h.translation()[j];
  }
  return {std::move(s), std::move(t)};
}

DiagIsometry inverse(const DiagIsometry& g) {
  Point t(g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j)
    t[j] = g.signs()[j] == Sign::plus ? -g.translation()[j] : g.translation()[j];
  return {g.signs(), std::move(t)};
}

SignVector rotational_part(const DiagIsometry& g) { return g.signs(); }

Point apply(const DiagIsometry& g, std::span<const Rational> x) {
  require_same_dim(g.dim(), x.size());
  Point y(g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j)
    y[j] = (g.signs()[j] == Sign::plus ? x[j] : -x[j]) + g.translation()[j];
  return y;
}

AxisPart component(const DiagIsometry& g, std::size_t i) {
  if (i >= g.dim())
    throw std::out_of_range("coordinate " + std::to_string(i) + " out of range for dimension " +
                            std::to_string(g.dim()));
  return {g.signs()[i], g.translation()[i]};
}

DiagIsometry direct_sum(std::span<const AxisPart> parts) {
  if (parts.empty()) throw std::invalid_argument("direct sum of no parts");
  SignVector s;
  Point t;
  s.reserve(parts.size());
  t.reserve(parts.size());
  for (const auto& p : parts) {
    s.push_back(p.sign);
    t.push_back(p.shift);
  }
  return {std::move(s), std::move(t)};
}

std::string SymIsometry1::to_string() const {
  return "(" + std::to_string(to_int(sign)) + ", " + translation.to_string() + ")";
}

SymIsometry1 compose(const SymIsometry1& g, const SymIsometry1& h) {
  return {g.sign * h.sign, lf_affine_apply(to_int(g.sign), h.translation, g.translation)};
}

SymIsometry1 inverse(const SymIsometry1& g) {
  return {g.sign, g.sign == Sign::plus ? -g.translation : g.translation};
}

}  // namespace hw
