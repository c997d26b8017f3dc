#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hw/int_matrix.hpp"
#include "hw/isometry.hpp"

namespace hw {

struct Letter {
  std::size_t gen = 0;
  int exp = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Word in the free group on a_0, a_1, ...
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Signed encoding: +(i+1) is a_i, -(i+1) is a_i^{-1}.
  static Word from_signed(const std::vector<long>& code);
  std::vector<long> to_signed() const;

  static Word generator(std::size_t i) { return Word({{i, 1}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  std::string to_string() const;

  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word free_reduce(const Word& w);

/// sigma^k: a_i -> a_{(i - k) mod modulus}.
Word shift(const Word& w, std::size_t k, std::size_t modulus);

struct Presentation {
  std::size_t generator_count = 0;
  std::vector<Word> relators;  // freely reduced
};

/// F(r, n): relator i is a_i a_{i+1} ... a_{i+r-1} a_{i+r}^{-1}, indices mod n.
Presentation fibonacci_presentation(std::size_t r, std::size_t n);

/// One row per relator, one column per generator, entries are exponent sums.
IntMatrix relator_matrix(const Presentation& p);

/// Elementary divisors of the abelianization, one per generator; 0 marks a
/// free Z summand.
std::vector<BigInt> abelianization(const Presentation& p);

/// Images of the generators under a homomorphism into an isometry group.
template <class Iso>
class GenImages {
 public:
  GenImages(Iso unit, std::vector<Iso> images) : unit_(std::move(unit)), images_(std::move(images)) {}
  explicit GenImages(std::vector<Iso> images) : images_(std::move(images)) {
    if (images_.empty()) throw std::invalid_argument("no generator images; pass an explicit identity");
    unit_ = identity_like(images_.front());
  }

  const Iso& unit() const { return unit_; }
  const std::vector<Iso>& images() const { return images_; }
  const Iso& operator[](std::size_t i) const { return images_.at(i); }
  std::size_t size() const { return images_.size(); }

 private:
  Iso unit_;
  std::vector<Iso> images_;
};

/// Left-to-right product of the images; the word need not be reduced.
template <class Iso>
Iso evaluate(const Word& w, const GenImages<Iso>& imgs) {
  Iso acc = imgs.unit();
  for (const auto& l : w.letters()) {
    if (l.gen >= imgs.size())
      throw std::out_of_range("generator a_" + std::to_string(l.gen) + " has no image");
    acc = compose(acc, l.exp > 0 ? imgs[l.gen] : inverse(imgs[l.gen]));
  }
  return acc;
}

struct RelatorCheck {
  std::size_t index = 0;
  bool trivial = false;
};

struct RelatorReport {
  std::vector<RelatorCheck> relators;
  bool pass = false;
};

template <class Iso>
RelatorReport verify_relators(const Presentation& p, const GenImages<Iso>& imgs) {
  RelatorReport report;
  report.pass = true;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const bool ok = evaluate(p.relators[i], imgs) == imgs.unit();
    report.relators.push_back({i, ok});
    report.pass = report.pass && ok;
  }
  return report;
}

}  // namespace hw
