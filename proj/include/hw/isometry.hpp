#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hw/rational.hpp"

namespace hw {

/// Diagonal entry of an orthogonal part restricted to {+1, -1}.
enum class Sign : std::int8_t { minus = -1, plus = 1 };

constexpr Sign operator*(Sign a, Sign b) {
  return static_cast<int>(a) * static_cast<int>(b) > 0 ? Sign::plus : Sign::minus;
}
constexpr int to_int(Sign s) { return static_cast<int>(s); }
/// Throws std::invalid_argument unless v is +1 or -1.
Sign sign_from_int(long v);

using SignVector = std::vector<Sign>;
using Point = std::vector<Rational>;

/// One coordinate of a diagonal isometry: x -> sign * x + shift in E(1).
struct AxisPart {
  Sign sign = Sign::plus;
  Rational shift;

  friend bool operator==(const AxisPart&, const AxisPart&) = default;
};

/// (B, b) in E(n) with B = diag(signs), acting by x -> Bx + b.
class DiagIsometry {
 public:
  DiagIsometry() = default;
  DiagIsometry(SignVector signs, Point translation);

  static DiagIsometry identity(std::size_t dim);

  std::size_t dim() const { return signs_.size(); }
  const SignVector& signs() const { return signs_; }
  const Point& translation() const { return translation_; }

  bool is_identity() const;
  bool is_translation() const;

  /// Bit j set iff signs[j] == -1.
  std::uint64_t sign_mask() const;

  std::string to_string() const;

  friend bool operator==(const DiagIsometry&, const DiagIsometry&) = default;

 private:
  SignVector signs_;
  Point translation_;
};

/// (A, a)(B, b) = (AB, Ab + a). Throws std::invalid_argument on dimension mismatch.
DiagIsometry compose(const DiagIsometry& g, const DiagIsometry& h);
DiagIsometry inverse(const DiagIsometry& g);
SignVector rotational_part(const DiagIsometry& g);
Point apply(const DiagIsometry& g, std::span<const Rational> x);

/// Coordinate projection phi^(i): (C, c) -> (C_i, c_i).
AxisPart component(const DiagIsometry& g, std::size_t i);
DiagIsometry direct_sum(std::span<const AxisPart> parts);

inline DiagIsometry identity_like(const DiagIsometry& g) { return DiagIsometry::identity(g.dim()); }

/// Element of E(1) whose translation is a formal linear form in d_0, d_1, ...
struct SymIsometry1 {
  Sign sign = Sign::plus;
  LinForm translation;

  std::string to_string() const;

  friend bool operator==(const SymIsometry1&, const SymIsometry1&) = default;
};

SymIsometry1 compose(const SymIsometry1& g, const SymIsometry1& h);
SymIsometry1 inverse(const SymIsometry1& g);
inline SymIsometry1 identity_like(const SymIsometry1&) { return {}; }

}  // namespace hw
