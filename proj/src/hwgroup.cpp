#include "hw/hwgroup.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace hw {

SignVector standard_signs(std::size_t n, std::size_t i) {
  SignVector s(n, Sign::minus);
  s.at(i) = Sign::plus;
  return s;
}

HWCandidate::HWCandidate(std::size_t n, std::vector<Point> translations) : dim_(n) {
  if (n % 2 == 0)
    throw std::invalid_argument("dimension " + std::to_string(n) +
                                " is even; Hantzsche-Wendt groups exist only in odd dimensions");
  if (n < 3) throw std::invalid_argument("dimension must be at least 3");
  if (n > 63) throw std::invalid_argument("dimension above 63 is not supported");
  if (translations.size() != n - 1)
    throw std::invalid_argument("expected " + std::to_string(n - 1) + " translations, got " +
                                std::to_string(translations.size()));
  generators_.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    auto& b = translations[i];
    if (b.size() != n)
      throw std::invalid_argument("translation " + std::to_string(i) + " has length " +
                                  std::to_string(b.size()) + ", expected " + std::to_string(n));
    for (const auto& q : b)
      if (!(q * Rational(2)).is_integer())
        throw std::invalid_argument("translation entry " + q.to_string() + " is not a half-integer");
    generators_.emplace_back(standard_signs(n, i), std::move(b));
  }
}

std::vector<Point> HWCandidate::translations() const {
  std::vector<Point> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g.translation());
  return out;
}

HWCandidate build_candidate(std::size_t n, std::vector<Point> translations) {
  return HWCandidate(n, std::move(translations));
}

HWCandidate cyclic_hw(std::size_t n) {
  if (n % 2 == 0 || n < 3)
    return HWCandidate(n, {});  // throws with the right diagnostic
  const Rational half = rational(1, 2);
  std::vector<Point> t(n - 1, Point(n));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    t[i][i] = half;
    t[i][i + 1] = half;
  }
  return HWCandidate(n, std::move(t));
}

std::size_t HolonomyTable::index_of(std::uint64_t mask) const {
  auto it = index_.find(mask);
  if (it == index_.end()) throw std::logic_error("holonomy table is not closed");
  return it->second;
}

const DiagIsometry* HolonomyTable::find(std::uint64_t mask) const {
  auto it = index_.find(mask);
  return it == index_.end() ? nullptr : &entries_[it->second].representative;
}

HolonomyTable holonomy(const HWCandidate& c) {
  HolonomyTable table;
  auto id = DiagIsometry::identity(c.dim());
  table.index_.emplace(0, 0);
  table.entries_.push_back({0, std::move(id)});
  for (std::size_t head = 0; head < table.entries_.size(); ++head) {
    for (const auto& g : c.generators()) {
      auto prod = compose(table.entries_[head].representative, g);
      const auto mask = prod.sign_mask();
      if (table.index_.contains(mask)) continue;
      table.index_.emplace(mask, table.entries_.size());
      table.entries_.push_back({mask, std::move(prod)});
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// Lattice

namespace {

BigInt lcm_of_denominators(const std::vector<Point>& vs) {
  BigInt d = 1;
  for (const auto& v : vs)
    for (const auto& q : v) {
      const BigInt qd = q.den();
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), qd.get_mpz_t());
    }
  return d;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

Lattice::Lattice(std::size_t dim, IntMatrix rows, BigInt denominator) : dim_(dim) {
  if (denominator <= 0) throw std::invalid_argument("lattice denominator must be positive");
  if (rows.cols() != dim) throw std::invalid_argument("lattice rows have wrong length");
  auto hnf = hermite_normal_form(rows);
  basis_ = hnf.basis.top_rows(hnf.rank);
  // Cancel any factor shared by every entry and the denominator.
  BigInt g = denominator;
  for (std::size_t r = 0; r < basis_.rows(); ++r)
    for (const auto& x : basis_.row(r)) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g != 1) {
    for (std::size_t r = 0; r < basis_.rows(); ++r)
      for (auto& x : basis_.row(r)) x /= g;
    denominator /= g;
  }
  denominator_ = std::move(denominator);
  if (basis_.rows() == 0) denominator_ = 1;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t p = 0;
    while (basis_(r, p) == 0) ++p;
    pivot_cols_.push_back(p);
  }
}

namespace {

// Integer row span of `rows`, reduced in chunks so the working matrix stays
// small: basis so far on top, the next batch below.
IntMatrix row_basis(const std::set<std::vector<BigInt>>& rows, std::size_t dim) {
  const std::size_t chunk = 4 * dim + 8;
  IntMatrix basis(0, dim);
  auto it = rows.begin();
  while (it != rows.end()) {
    std::size_t take = 0;
    for (auto j = it; j != rows.end() && take < chunk; ++j) ++take;
    IntMatrix m(basis.rows() + take, dim);
    for (std::size_t r = 0; r < basis.rows(); ++r)
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = basis(r, c);
    for (std::size_t r = basis.rows(); r < m.rows(); ++r, ++it)
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = (*it)[c];
    auto hnf = hermite_normal_form(m);
    basis = hnf.basis.top_rows(hnf.rank);
  }
  return basis;
}

bool is_zero_row(const std::vector<BigInt>& row) {
  return std::all_of(row.begin(), row.end(), [](const BigInt& x) { return x == 0; });
}

std::vector<BigInt> scaled(const Point& v, const BigInt& d) {
  std::vector<BigInt> row(v.size());
  for (std::size_t c = 0; c < v.size(); ++c) row[c] = (v[c] * Rational(d)).num();
  return row;
}

}  // namespace

Lattice Lattice::spanned_by(std::size_t dim, const std::vector<Point>& vectors) {
  const BigInt d = lcm_of_denominators(vectors);
  std::set<std::vector<BigInt>> rows;
  for (const auto& v : vectors) {
    if (v.size() != dim) throw std::invalid_argument("vector length mismatch");
    auto row = scaled(v, d);
    if (!is_zero_row(row)) rows.insert(std::move(row));
  }
  return Lattice(dim, row_basis(rows, dim), d);
}

Point Lattice::basis_vector(std::size_t r) const {
  Point v(dim_);
  for (std::size_t c = 0; c < dim_; ++c) v[c] = Rational(basis_(r, c), denominator_);
  return v;
}

bool Lattice::contains(std::span<const Rational> v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector length mismatch");
  std::vector<BigInt> w(dim_);
  for (std::size_t c = 0; c < dim_; ++c) {
    const Rational scaled = v[c] * Rational(denominator_);
    if (!scaled.is_integer()) return false;
    w[c] = scaled.num();
  }
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const auto p = pivot_cols_[r];
    if (w[p] % basis_(r, p) != 0) return false;
    const BigInt q = w[p] / basis_(r, p);
    for (std::size_t c = p; c < dim_; ++c) w[c] -= q * basis_(r, c);
  }
  return std::all_of(w.begin(), w.end(), [](const BigInt& x) { return x == 0; });
}

Point Lattice::reduce(std::span<const Rational> v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector length mismatch");
  Point w(v.begin(), v.end());
  const Rational den(denominator_);
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const auto p = pivot_cols_[r];
    const Rational scaled = w[p] * den;
    const BigInt q = floor_div(scaled.num(), scaled.den() * basis_(r, p));
    if (q == 0) continue;
    for (std::size_t c = p; c < dim_; ++c) w[c] -= Rational(q * basis_(r, c), denominator_);
  }
  return w;
}

Lattice Lattice::project(std::span<const std::size_t> cols) const {
  return Lattice(cols.size(), basis_.select_cols(cols), denominator_);
}

// ---------------------------------------------------------------------------
// Classification

Lattice translation_lattice(const HWCandidate& c, const HolonomyTable& table) {
  // For a coset representative t, generator g and the representative u of
  // t g, the Schreier generator t g u^-1 is the translation by
  // A_t b_g + a_t - a_u. Work with translations scaled to integers.
  const std::size_t n = c.dim();
  std::vector<Point> all;
  for (const auto& e : table.entries()) all.push_back(e.representative.translation());
  for (const auto& g : c.generators()) all.push_back(g.translation());
  const BigInt d = lcm_of_denominators(all);

  std::vector<std::vector<BigInt>> reps;
  for (const auto& e : table.entries()) reps.push_back(scaled(e.representative.translation(), d));
  std::vector<std::vector<BigInt>> gens;
  for (const auto& g : c.generators()) gens.push_back(scaled(g.translation(), d));
  std::set<std::vector<BigInt>> rows;
  std::vector<BigInt> t(n);
  for (std::size_t ei = 0; ei < table.size(); ++ei) {
    const auto& e = table.entries()[ei];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const auto& u = reps[table.index_of(e.mask ^ c.generators()[gi].sign_mask())];
      const auto& bg = gens[gi];
      for (std::size_t j = 0; j < n; ++j) {
        if ((e.mask >> j) & 1)
          t[j] = reps[ei][j] - bg[j] - u[j];
        else
          t[j] = reps[ei][j] + bg[j] - u[j];
      }
      if (!is_zero_row(t)) rows.insert(t);
    }
  }
  return Lattice(n, row_basis(rows, n), d);
}

Lattice translation_lattice(const HWCandidate& c) { return translation_lattice(c, holonomy(c)); }

bool is_crystallographic(const HWCandidate& c) { return translation_lattice(c).rank() == c.dim(); }

namespace {

std::vector<std::size_t> fixed_coordinates(const DiagIsometry& g) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < g.dim(); ++j)
    if (g.signs()[j] == Sign::plus) out.push_back(j);
  return out;
}

// The coset (A, a + L) contains an element of finite order iff some lambda in
// L satisfies lambda_j = -a_j for every j with A_j = +1.
bool torsion_free_with(const HolonomyTable& table, const Lattice& lattice) {
  for (const auto& e : table.entries()) {
    if (e.mask == 0) continue;
    const Point a = lattice.reduce(e.representative.translation());
    const auto fixed = fixed_coordinates(e.representative);
    Point target;
    target.reserve(fixed.size());
    for (auto j : fixed) target.push_back(-a[j]);
    if (lattice.project(fixed).contains(target)) return false;
  }
  return true;
}

}  // namespace

bool is_torsion_free(const HWCandidate& c) {
  const auto table = holonomy(c);
  const auto lattice = translation_lattice(c, table);
  if (lattice.rank() != c.dim()) throw std::domain_error("candidate is not crystallographic");
  return torsion_free_with(table, lattice);
}

bool torsion_oracle(const HWCandidate& c, int bound) {
  const auto table = holonomy(c);
  const auto lattice = translation_lattice(c, table);
  if (lattice.rank() != c.dim()) throw std::domain_error("candidate is not crystallographic");
  const std::size_t rank = lattice.rank();
  std::vector<Point> basis;
  for (std::size_t r = 0; r < rank; ++r) basis.push_back(lattice.basis_vector(r));

  for (const auto& e : table.entries()) {
    if (e.mask == 0) continue;
    const Point a = lattice.reduce(e.representative.translation());
    std::vector<int> coef(rank, -bound);
    while (true) {
      Point t = a;
      for (std::size_t r = 0; r < rank; ++r)
        if (coef[r] != 0)
          for (std::size_t j = 0; j < c.dim(); ++j) t[j] += Rational(coef[r]) * basis[r][j];
      const DiagIsometry g(e.representative.signs(), std::move(t));
      if (compose(g, g).is_identity()) return false;
      std::size_t k = 0;
      while (k < rank && coef[k] == bound) coef[k++] = -bound;
      if (k == rank) break;
      ++coef[k];
    }
  }
  return true;
}

Classification classify(const HWCandidate& c) {
  Classification out;
  const auto table = holonomy(c);
  const auto lattice = translation_lattice(c, table);
  out.holonomy_size = table.size();
  out.holonomy_in_sl = std::all_of(table.entries().begin(), table.entries().end(),
                                   [](const auto& e) { return std::popcount(e.mask) % 2 == 0; });
  out.crystallographic = lattice.rank() == c.dim();
  if (out.crystallographic) out.torsion_free = torsion_free_with(table, lattice);
  out.hantzsche_wendt = out.crystallographic && *out.torsion_free &&
                        out.holonomy_size == (std::size_t{1} << (c.dim() - 1)) && out.holonomy_in_sl;
  return out;
}

bool is_hantzsche_wendt(const HWCandidate& c) { return classify(c).hantzsche_wendt; }

std::optional<DiagIsometry> torsion_witness(const HWCandidate& c) {
  const auto table = holonomy(c);
  for (const auto& e : table.entries()) {
    if (e.mask == 0) continue;
    if (compose(e.representative, e.representative).is_identity()) return e.representative;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Enumeration

CandidateSpace::CandidateSpace(std::size_t n) : dim_(n) {
  if (n % 2 == 0 || n < 3) HWCandidate(n, {});  // reuse the constructor's diagnostics
}

std::uint64_t CandidateSpace::size() const {
  if (bits() >= 64) throw std::overflow_error("candidate space does not fit in 64 bits");
  return std::uint64_t{1} << bits();
}

HWCandidate CandidateSpace::from_bits(const std::vector<bool>& bits) const {
  if (bits.size() != this->bits()) throw std::invalid_argument("wrong number of bits");
  const Rational half = rational(1, 2);
  std::vector<Point> t(dim_ - 1, Point(dim_));
  for (std::size_t i = 0; i + 1 < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (bits[i * dim_ + j]) t[i][j] = half;
  return HWCandidate(dim_, std::move(t));
}

HWCandidate CandidateSpace::at(std::uint64_t index) const {
  if (index >= size()) throw std::out_of_range("candidate index out of range");
  std::vector<bool> b(bits());
  for (std::size_t k = 0; k < b.size(); ++k) b[k] = (index >> k) & 1U;
  return from_bits(b);
}

HWCandidate CandidateSpace::sample(std::mt19937_64& rng) const {
  std::vector<bool> b(bits());
  std::uint64_t word = 0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (k % 64 == 0) word = rng();
    b[k] = (word >> (k % 64)) & 1U;
  }
  return from_bits(b);
}

std::vector<HWCandidate> enumerate_candidates(std::size_t n) {
  const CandidateSpace space(n);
  std::vector<HWCandidate> out;
  out.reserve(space.size());
  for (std::uint64_t i = 0; i < space.size(); ++i) out.push_back(space.at(i));
  return out;
}

}  // namespace hw
