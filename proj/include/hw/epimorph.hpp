#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hw/fpgroup.hpp"
#include "hw/hwgroup.hpp"
#include "hw/isometry.hpp"

namespace hw {

/// D_0, D_1, ... in E(1) with symbolic translations d_0, ..., d_{n-2}.
///
/// The seeds D_0..D_{n-2} are (-1, d_i) except D_k = (+1, d_k); k = n - 1
/// leaves every seed with sign -1. Later terms follow
/// D_{i+n-1} = D_i D_{i+1} ... D_{i+n-2}.
class SymSequence {
 public:
  SymSequence(std::size_t n, std::size_t k);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  /// Indices 0 .. 3n-2.
  const std::vector<SymIsometry1>& terms() const { return terms_; }
  const SymIsometry1& operator[](std::size_t i) const { return terms_.at(i); }

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<SymIsometry1> terms_;
};

SymSequence symbolic_sequence(std::size_t n, std::size_t k);

/// D_{2n+j} == D_j for 0 <= j <= n-2, exactly.
bool verify_periodicity(std::size_t n, std::size_t k);
bool verify_periodicity(const SymSequence& seq);

/// D_{i+n-1} == D_{i-1}^{-1} D_{i+n-2}^2 for 1 <= i <= 2n-1.
bool verify_addrel(std::size_t n, std::size_t k);
bool verify_addrel(const SymSequence& seq);

/// Extends seed images of a_0..a_{n-2} to all 2n generators of F(n-1, 2n) by
/// the Fibonacci recursion, computed in whatever group Iso lives in.
template <class Iso>
std::vector<Iso> fibonacci_extend(std::vector<Iso> seeds, std::size_t total) {
  const std::size_t r = seeds.size();
  if (r == 0) throw std::invalid_argument("no seed images");
  seeds.reserve(total);
  for (std::size_t i = 0; seeds.size() < total; ++i) {
    Iso p = seeds[i];
    for (std::size_t j = 1; j < r; ++j) p = compose(p, seeds[i + j]);
    seeds.push_back(std::move(p));
  }
  return seeds;
}

/// phi^(j) applied to each generator: the seeds of a one-dimensional
/// Fibonacci representation, as 1-dimensional isometries.
GenImages<DiagIsometry> component_images(const HWCandidate& c, std::size_t j);

/// Images of a_0..a_{2n-1}: a_i -> (B_i, b_i) for i <= n-2, the rest by the
/// Fibonacci recursion in E(n).
GenImages<DiagIsometry> build_epimorphism(const HWCandidate& c);

/// Same images assembled as the direct sum of the n one-dimensional
/// sequences; an independent route used as a cross-check.
GenImages<DiagIsometry> build_epimorphism_by_components(const HWCandidate& c);

struct MainTheoremReport {
  HWCandidate candidate;
  Classification classification;
  RelatorReport relators;
  bool surjective = false;
  bool routes_agree = false;
  std::vector<std::string> notes;

  /// Relators trivial and generators hit: Phi is an epimorphism onto the
  /// group generated by the candidate.
  bool epimorphism() const { return relators.pass && surjective && routes_agree; }
  /// True when the candidate is HW and the map is an epimorphism.
  bool pass() const { return classification.hantzsche_wendt && epimorphism(); }
};

MainTheoremReport verify_main_theorem(const HWCandidate& c);

}  // namespace hw
