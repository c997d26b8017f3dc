#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hw/rational.hpp"

namespace hw {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<BigInt> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const BigInt> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);

  /// Keeps only the first `count` rows.
  IntMatrix top_rows(std::size_t count) const;
  /// Keeps the listed columns, in the given order.
  IntMatrix select_cols(std::span<const std::size_t> cols) const;

  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct HermiteForm {
  IntMatrix basis;  // same shape as the input; zero rows at the bottom
  std::size_t rank = 0;
};

/// Row-style Hermite normal form: echelon rows with positive pivots and
/// entries above each pivot reduced into [0, pivot). Spans the same row
/// lattice as the input.
HermiteForm hermite_normal_form(const IntMatrix& m);

/// Elementary divisors d_1 | d_2 | ... of m, min(rows, cols) of them,
/// nonnegative, zeros last.
std::vector<BigInt> smith_normal_form(const IntMatrix& m);

}  // namespace hw
