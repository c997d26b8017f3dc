#include "hw/fpgroup.hpp"

#include <algorithm>

namespace hw {

Word Word::from_signed(const std::vector<long>& code) {
  std::vector<Letter> letters;
  letters.reserve(code.size());
  for (long c : code) {
    if (c == 0) throw std::invalid_argument("0 is not a valid letter code");
    letters.push_back({static_cast<std::size_t>(c > 0 ? c - 1 : -c - 1), c > 0 ? 1 : -1});
  }
  return Word(std::move(letters));
}

std::vector<long> Word::to_signed() const {
  std::vector<long> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.exp * static_cast<long>(l.gen + 1));
  return out;
}

Word Word::inverse() const {
  std::vector<Letter> r(letters_.rbegin(), letters_.rend());
  for (auto& l : r) l.exp = -l.exp;
  return Word(std::move(r));
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const auto& l : letters_) {
    if (!s.empty()) s += ' ';
    s += "a" + std::to_string(l.gen);
    if (l.exp < 0) s += "^-1";
  }
  return s;
}

Word operator*(const Word& u, const Word& v) {
  std::vector<Letter> l = u.letters_;
  l.insert(l.end(), v.letters_.begin(), v.letters_.end());
  return Word(std::move(l));
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back().gen == l.gen && stack.back().exp == -l.exp)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(std::move(stack));
}

Word shift(const Word& w, std::size_t k, std::size_t modulus) {
  if (modulus == 0) throw std::invalid_argument("shift modulus must be positive");
  std::vector<Letter> out = w.letters();
  const std::size_t kk = k % modulus;
  for (auto& l : out) {
    if (l.gen >= modulus)
      throw std::invalid_argument("generator index " + std::to_string(l.gen) + " exceeds modulus");
    l.gen = (l.gen + modulus - kk) % modulus;
  }
  return Word(std::move(out));
}

Presentation fibonacci_presentation(std::size_t r, std::size_t n) {
  if (r == 0 || n == 0) throw std::invalid_argument("F(r, n) needs r >= 1 and n >= 1");
  Presentation p{n, {}};
  p.relators.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Letter> l;
    l.reserve(r + 1);
    for (std::size_t j = 0; j < r; ++j) l.push_back({(i + j) % n, 1});
    l.push_back({(i + r) % n, -1});
    p.relators.push_back(free_reduce(Word(std::move(l))));
  }
  return p;
}

IntMatrix relator_matrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), p.generator_count);
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (const auto& l : p.relators[r].letters()) {
      if (l.gen >= p.generator_count) throw std::invalid_argument("relator uses unknown generator");
      m(r, l.gen) += l.exp;
    }
  return m;
}

std::vector<BigInt> abelianization(const Presentation& p) {
  auto d = smith_normal_form(relator_matrix(p));
  d.resize(p.generator_count, BigInt(0));
  return d;
}

}  // namespace hw
