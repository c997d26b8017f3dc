#include "hw/int_matrix.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace hw {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

IntMatrix IntMatrix::top_rows(std::size_t count) const {
  count = std::min(count, rows_);
  IntMatrix m(count, cols_);
  std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(count * cols_), m.data_.begin());
  return m;
}

IntMatrix IntMatrix::select_cols(std::span<const std::size_t> cols) const {
  IntMatrix m(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols.size(); ++k) m(r, k) = (*this)(r, cols[k]);
  return m;
}

std::string IntMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out += r == 0 ? "[" : ", [";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += (*this)(r, c).get_str();
    }
    out += "]";
  }
  return out + "]";
}

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Row index in [from, rows) holding the smallest nonzero |m(r, col)|.
std::optional<std::size_t> smallest_in_col(const IntMatrix& m, std::size_t col, std::size_t from) {
  std::optional<std::size_t> best;
  for (std::size_t r = from; r < m.rows(); ++r) {
    if (m(r, col) == 0) continue;
    if (!best || abs(m(r, col)) < abs(m(*best, col))) best = r;
  }
  return best;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& input) {
  IntMatrix h = input;
  std::size_t pivot_row = 0;

  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    // Euclid on the column until only the pivot row is nonzero below it.
    while (true) {
      auto best = smallest_in_col(h, col, pivot_row);
      if (!best) break;
      h.swap_rows(pivot_row, *best);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < h.rows(); ++r) {
        if (h(r, col) == 0) continue;
        h.add_row_multiple(r, pivot_row, -floor_div(h(r, col), h(pivot_row, col)));
        if (h(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(pivot_row, col) == 0) continue;
    if (h(pivot_row, col) < 0)
      for (auto& x : h.row(pivot_row)) x = -x;
    for (std::size_t r = 0; r < pivot_row; ++r)
      h.add_row_multiple(r, pivot_row, -floor_div(h(r, col), h(pivot_row, col)));
    ++pivot_row;
  }
  return {std::move(h), pivot_row};
}

std::vector<BigInt> smith_normal_form(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t n = std::min(m.rows(), m.cols());
  std::vector<BigInt> divisors;
  divisors.reserve(n);

  for (std::size_t t = 0; t < n; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto place_pivot = [&]() {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t r = t; r < m.rows(); ++r)
        for (std::size_t c = t; c < m.cols(); ++c)
          if (m(r, c) != 0 && (!best || abs(m(r, c)) < abs(m(best->first, best->second))))
            best = {r, c};
      if (!best) return false;
      m.swap_rows(t, best->first);
      m.swap_cols(t, best->second);
      return true;
    };
    if (!place_pivot()) break;

    while (true) {
      bool clean = true;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (m(r, t) == 0) continue;
        m.add_row_multiple(r, t, -floor_div(m(r, t), m(t, t)));
        if (m(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (m(t, c) == 0) continue;
        m.add_col_multiple(c, t, -floor_div(m(t, c), m(t, t)));
        if (m(t, c) != 0) clean = false;
      }
      if (!clean) {
        place_pivot();
        continue;
      }
      // Pivot must divide the whole trailing block.
      std::optional<std::size_t> offender;
      for (std::size_t r = t + 1; r < m.rows() && !offender; ++r)
        for (std::size_t c = t + 1; c < m.cols(); ++c)
          if (m(r, c) % m(t, t) != 0) {
            offender = r;
            break;
          }
      if (!offender) break;
      m.add_row_multiple(t, *offender, BigInt(1));
    }
    divisors.push_back(abs(m(t, t)));
  }
  divisors.resize(n, BigInt(0));
  return divisors;
}

}  // namespace hw
