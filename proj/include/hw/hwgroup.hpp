#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "hw/int_matrix.hpp"
#include "hw/isometry.hpp"

namespace hw {

/// Generators (B_i, b_i), i = 0..n-2, in the standard diagonal form: B_i is
/// -1 everywhere except +1 at coordinate i, and b_i lies in (1/2)Z^n.
class HWCandidate {
 public:
  /// Throws std::invalid_argument for even or too small n, a wrong number or
  /// length of translations, or an entry outside (1/2)Z.
  HWCandidate(std::size_t n, std::vector<Point> translations);

  std::size_t dim() const { return dim_; }
  const std::vector<DiagIsometry>& generators() const { return generators_; }
  std::vector<Point> translations() const;

  friend bool operator==(const HWCandidate&, const HWCandidate&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<DiagIsometry> generators_;
};

/// Sign pattern of generator i in dimension n.
SignVector standard_signs(std::size_t n, std::size_t i);

HWCandidate build_candidate(std::size_t n, std::vector<Point> translations);

/// b_i = (e_i + e_{i+1}) / 2.
HWCandidate cyclic_hw(std::size_t n);

/// One representative per rotational part, discovered breadth-first from the
/// identity by right multiplication with generators.
class HolonomyTable {
 public:
  struct Entry {
    std::uint64_t mask;  // bit j set iff sign j is -1
    DiagIsometry representative;
  };

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const DiagIsometry* find(std::uint64_t mask) const;
  /// Position of the entry with this mask; throws std::logic_error if absent.
  std::size_t index_of(std::uint64_t mask) const;

 private:
  friend HolonomyTable holonomy(const HWCandidate&);
  std::vector<Entry> entries_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

HolonomyTable holonomy(const HWCandidate& c);

/// Full-rank-or-not lattice in Q^n: rows of an HNF integer basis divided by a
/// common positive denominator. Zero rows are dropped.
class Lattice {
 public:
  Lattice(std::size_t dim, IntMatrix hnf_rows, BigInt denominator);

  /// Canonical lattice spanned by the given rational vectors.
  static Lattice spanned_by(std::size_t dim, const std::vector<Point>& vectors);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  const BigInt& denominator() const { return denominator_; }

  Point basis_vector(std::size_t r) const;
  bool contains(std::span<const Rational> v) const;
  /// Representative of v + L in the HNF fundamental cell: along every pivot
  /// column the coordinate lies in [0, pivot / denominator).
  Point reduce(std::span<const Rational> v) const;
  /// Image under the coordinate projection onto `cols`.
  Lattice project(std::span<const std::size_t> cols) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  std::size_t dim_;
  IntMatrix basis_;
  BigInt denominator_;
  std::vector<std::size_t> pivot_cols_;
};

/// Kernel of the holonomy projection, generated by Schreier generators.
Lattice translation_lattice(const HWCandidate& c);
Lattice translation_lattice(const HWCandidate& c, const HolonomyTable& table);

bool is_crystallographic(const HWCandidate& c);

/// Throws std::domain_error if c is not crystallographic.
bool is_torsion_free(const HWCandidate& c);

/// Brute-force counterpart of is_torsion_free: squares elements of each coset
/// with lattice coefficients in [-bound, bound].
bool torsion_oracle(const HWCandidate& c, int bound = 2);

struct Classification {
  bool crystallographic = false;
  std::optional<bool> torsion_free;  // empty when not crystallographic
  std::size_t holonomy_size = 0;
  bool holonomy_in_sl = false;
  bool hantzsche_wendt = false;
};

Classification classify(const HWCandidate& c);
bool is_hantzsche_wendt(const HWCandidate& c);

/// Some element of the group with finite order other than the identity, if
/// one is found among the holonomy representatives. Works on any candidate.
std::optional<DiagIsometry> torsion_witness(const HWCandidate& c);

/// Translation assignments with entries in {0, 1/2}: bit (i*n + j) of the index
/// sets entry j of generator i.
class CandidateSpace {
 public:
  explicit CandidateSpace(std::size_t n);

  std::size_t dim() const { return dim_; }
  std::size_t bits() const { return dim_ * (dim_ - 1); }
  /// 2^bits; throws std::overflow_error when that exceeds 64 bits.
  std::uint64_t size() const;

  HWCandidate at(std::uint64_t index) const;
  HWCandidate from_bits(const std::vector<bool>& bits) const;
  HWCandidate sample(std::mt19937_64& rng) const;

 private:
  std::size_t dim_;
};

/// All candidates of dimension n in index order.
std::vector<HWCandidate> enumerate_candidates(std::size_t n);

}  // namespace hw
