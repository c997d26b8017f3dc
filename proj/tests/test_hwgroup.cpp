#include <doctest.h>

#include <bit>
#include <random>
#include <stdexcept>

#include "hw/hwgroup.hpp"
#include "test_support.hpp"

using namespace hw;

namespace {

const Rational half = rational(1, 2);

HWCandidate zero_candidate(std::size_t n) { return build_candidate(n, std::vector<Point>(n - 1, Point(n))); }

// Translations of every word of length <= max_len whose rotational part is
// trivial, found by depth-first search over generators and inverses.
Lattice lattice_by_word_search(const HWCandidate& c, std::size_t max_len) {
  std::vector<DiagIsometry> letters;
  for (const auto& g : c.generators()) {
    letters.push_back(g);
    letters.push_back(inverse(g));
  }
  std::vector<Point> found;
  auto dfs = [&](auto&& self, const DiagIsometry& acc, std::size_t depth) -> void {
    if (acc.is_translation() && !acc.is_identity()) found.push_back(acc.translation());
    if (depth == max_len) return;
    for (const auto& l : letters) self(self, compose(acc, l), depth + 1);
  };
  dfs(dfs, DiagIsometry::identity(c.dim()), 0);
  return Lattice::spanned_by(c.dim(), found);
}

// Conjugate every generator by the translation x -> x + v.
HWCandidate conjugate_by_translation(const HWCandidate& c, const Point& v) {
  const DiagIsometry t(SignVector(c.dim(), Sign::plus), v);
  std::vector<Point> trans;
  for (const auto& g : c.generators()) trans.push_back(compose(compose(t, g), inverse(t)).translation());
  return build_candidate(c.dim(), trans);
}

}  // namespace

TEST_CASE("build candidate") {
  const auto c = build_candidate(3, {{half, half, 0}, {0, half, half}});
  CHECK(c == cyclic_hw(3));
  CHECK_THROWS_WITH_AS(build_candidate(4, std::vector<Point>(3, Point(4))),
                       doctest::Contains("only in odd dimensions"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_candidate(3, {{rational(1, 3), 0, 0}, {0, 0, 0}}),
                       doctest::Contains("half-integer"), std::invalid_argument);
  CHECK_THROWS_AS(build_candidate(3, {{0, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(build_candidate(3, {{0, 0}, {0, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(build_candidate(1, {}), std::invalid_argument);
}

TEST_CASE("cyclic HW group") {
  const auto c3 = cyclic_hw(3);
  REQUIRE(c3.generators().size() == 2);
  CHECK(c3.generators()[0] == DiagIsometry({Sign::plus, Sign::minus, Sign::minus}, {half, half, 0}));
  CHECK(c3.generators()[1] == DiagIsometry({Sign::minus, Sign::plus, Sign::minus}, {0, half, half}));

  const auto c5 = cyclic_hw(5);
  CHECK(c5.generators().size() == 4);
  CHECK(c5.generators()[2].translation() == Point{0, 0, half, half, 0});
  CHECK(c5.generators()[2].signs() == standard_signs(5, 2));

  CHECK_THROWS_AS(cyclic_hw(2), std::invalid_argument);
  CHECK_THROWS_AS(cyclic_hw(4), std::invalid_argument);
}

TEST_CASE("holonomy") {
  const auto c3 = cyclic_hw(3);
  const auto t = holonomy(c3);
  CHECK(t.size() == 4);
  CHECK(t.entries()[0].representative.is_identity());
  const auto g0g1 = compose(c3.generators()[0], c3.generators()[1]);
  const DiagIsometry* rep = t.find(g0g1.sign_mask());
  REQUIRE(rep != nullptr);
  CHECK(rep->translation() == Point{half, 0, -half});
  CHECK(hw::testing::homogeneous(*rep) ==
        hw::testing::matmul(hw::testing::homogeneous(c3.generators()[0]), hw::testing::homogeneous(c3.generators()[1])));
  CHECK(holonomy(cyclic_hw(5)).size() == 16);
}

TEST_CASE("holonomy is C_2^{n-1} inside SL(n, Z) for every candidate") {
  std::mt19937_64 rng(4);
  for (std::size_t n : {3, 5, 7, 9}) {
    const CandidateSpace space(n);
    for (int i = 0; i < 20; ++i) {
      const auto c = space.sample(rng);
      const auto t = holonomy(c);
      CHECK(t.size() == (std::size_t{1} << (n - 1)));
      for (const auto& e : t.entries()) CHECK(std::popcount(e.mask) % 2 == 0);
    }
  }
}

TEST_CASE("translation lattice") {
  SUBCASE("cyclic n=3 is Z^3, confirmed by word search") {
    const auto l = translation_lattice(cyclic_hw(3));
    CHECK(l.rank() == 3);
    CHECK(l.basis() == IntMatrix::identity(3));
    CHECK(l.denominator() == 1);
    CHECK(lattice_by_word_search(cyclic_hw(3), 4) == l);
  }
  SUBCASE("cyclic n=5 is Z^5, confirmed by word search") {
    const auto l = translation_lattice(cyclic_hw(5));
    CHECK(l.basis() == IntMatrix::identity(5));
    CHECK(lattice_by_word_search(cyclic_hw(5), 6) == l);
  }
  SUBCASE("zero translations give rank 0") { CHECK(translation_lattice(zero_candidate(3)).rank() == 0); }
  SUBCASE("squares of generators lie in the lattice") {
    std::mt19937_64 rng(6);
    const CandidateSpace space(5);
    for (int i = 0; i < 50; ++i) {
      const auto c = space.sample(rng);
      const auto l = translation_lattice(c);
      for (const auto& g : c.generators()) {
        const Point sq = compose(g, g).translation();
        CHECK(l.contains(sq));
        // B b + b, written out.
        Point bb(c.dim());
        for (std::size_t j = 0; j < c.dim(); ++j)
          bb[j] = (g.signs()[j] == Sign::plus ? g.translation()[j] : -g.translation()[j]) + g.translation()[j];
        CHECK(bb == sq);
      }
    }
  }
}

TEST_CASE("lattice helpers") {
  const auto l = Lattice::spanned_by(2, {{half, 0}, {0, Rational(3)}});
  CHECK(l.rank() == 2);
  CHECK(l.denominator() == 2);
  CHECK(l.contains(Point{Rational(1), Rational(6)}));
  CHECK_FALSE(l.contains(Point{rational(1, 4), 0}));
  CHECK_FALSE(l.contains(Point{0, Rational(1)}));
  const auto r = l.reduce(Point{rational(7, 4), Rational(-4)});
  CHECK(r == Point{rational(1, 4), Rational(2)});
  CHECK(l.contains(Point{rational(7, 4) - r[0], Rational(-4) - r[1]}));
  const std::vector<std::size_t> second{1};
  CHECK(l.project(second).basis() == IntMatrix{{3}});
  CHECK(l.project(second).denominator() == 1);
}

TEST_CASE("crystallographic") {
  CHECK(is_crystallographic(cyclic_hw(3)));
  CHECK_FALSE(is_crystallographic(zero_candidate(3)));
  CHECK(is_crystallographic(cyclic_hw(7)));
  CHECK(translation_lattice(cyclic_hw(7)).rank() == 7);
}

TEST_CASE("torsion-freeness") {
  CHECK(is_torsion_free(cyclic_hw(3)));
  CHECK(torsion_oracle(cyclic_hw(3)));

  // b_0 = 0 makes g_0 an involution. The group is not crystallographic, so
  // the lattice-based test refuses; the witness still finds the involution.
  const auto inv = build_candidate(3, {{0, 0, 0}, {0, half, half}});
  CHECK_FALSE(is_crystallographic(inv));
  CHECK_THROWS_AS(is_torsion_free(inv), std::domain_error);
  const auto w = torsion_witness(inv);
  REQUIRE(w.has_value());
  CHECK(*w == inv.generators()[0]);
  CHECK_FALSE(is_hantzsche_wendt(inv));

  // Both routes refuse the same non-crystallographic candidate.
  const auto other = build_candidate(3, {{half, half, 0}, {0, half, 0}});
  CHECK_THROWS_AS(is_torsion_free(other), std::domain_error);
  CHECK_THROWS_AS(torsion_oracle(other), std::domain_error);
  CHECK_THROWS_AS(torsion_oracle(zero_candidate(3)), std::domain_error);
}

TEST_CASE("torsion criterion finds torsion in a crystallographic group") {
  // Crystallographic, but b_0 vanishes on the fixed axis of B_0, so g_0 is an
  // involution.
  const auto c = build_candidate(5, {{0, half, half, half, 0},
                                     {0, half, 0, 0, half},
                                     {0, half, half, half, half},
                                     {half, 0, 0, 0, half}});
  REQUIRE(is_crystallographic(c));
  CHECK(compose(c.generators()[0], c.generators()[0]).is_identity());
  CHECK_FALSE(is_torsion_free(c));
  CHECK_FALSE(torsion_oracle(c));
  CHECK_FALSE(is_hantzsche_wendt(c));

  // A five-dimensional HW candidate with translations outside the cyclic pattern.
  const auto hw5 = build_candidate(5, {{half, 0, half, half, 0},
                                       {0, half, 0, half, 0},
                                       {0, 0, half, half, half},
                                       {half, half, half, half, 0}});
  CHECK(is_torsion_free(hw5));
  CHECK(torsion_oracle(hw5));
  CHECK(is_hantzsche_wendt(hw5));
}

TEST_CASE("exhaustive n=3: torsion test agrees with the oracle") {
  std::size_t crystallographic = 0;
  std::size_t hw_count = 0;
  for (const auto& c : enumerate_candidates(3)) {
    const auto cls = classify(c);
    if (!cls.crystallographic) {
      CHECK_THROWS_AS(is_torsion_free(c), std::domain_error);
      continue;
    }
    ++crystallographic;
    CHECK(is_torsion_free(c) == torsion_oracle(c));
    hw_count += cls.hantzsche_wendt;
  }
  CHECK(crystallographic == 8);
  CHECK(hw_count == 8);
}

TEST_CASE("random n=5: torsion test agrees with the oracle") {
  std::mt19937_64 rng(20240521);
  const CandidateSpace space(5);
  std::size_t checked = 0, with_torsion = 0, without = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto c = space.sample(rng);
    if (!is_crystallographic(c)) continue;
    ++checked;
    const bool tf = is_torsion_free(c);
    (tf ? without : with_torsion)++;
    REQUIRE(tf == torsion_oracle(c));
  }
  MESSAGE("checked " << checked << " crystallographic candidates, " << without << " torsion-free");
  CHECK(checked > 300);
  CHECK(with_torsion > 0);
  CHECK(without > 0);
}

TEST_CASE("hantzsche-wendt classification") {
  for (std::size_t n : {3, 5, 7}) CHECK(is_hantzsche_wendt(cyclic_hw(n)));
  CHECK_FALSE(is_hantzsche_wendt(zero_candidate(3)));
  const auto cls = classify(cyclic_hw(5));
  CHECK(cls.crystallographic);
  CHECK(cls.torsion_free == true);
  CHECK(cls.holonomy_size == 16);
  CHECK(cls.holonomy_in_sl);
  CHECK_FALSE(classify(zero_candidate(5)).torsion_free.has_value());
}

TEST_CASE("classification is invariant under conjugation by integer translations") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> d(-3, 3);
  std::vector<HWCandidate> hw_candidates;
  for (const auto& c : enumerate_candidates(3))
    if (is_hantzsche_wendt(c)) hw_candidates.push_back(c);
  const CandidateSpace space5(5);
  while (hw_candidates.size() < 14) {
    auto c = space5.sample(rng);
    if (is_hantzsche_wendt(c)) hw_candidates.push_back(std::move(c));
  }
  for (const auto& c : hw_candidates) {
    for (int rep = 0; rep < 3; ++rep) {
      Point v(c.dim());
      for (auto& q : v) q = Rational(d(rng));
      const auto conj = conjugate_by_translation(c, v);
      const auto a = classify(c);
      const auto b = classify(conj);
      CHECK(a.crystallographic == b.crystallographic);
      CHECK(a.torsion_free == b.torsion_free);
      CHECK(a.hantzsche_wendt == b.hantzsche_wendt);
      CHECK(translation_lattice(c) == translation_lattice(conj));
    }
  }
}

TEST_CASE("candidate enumeration") {
  const auto all = enumerate_candidates(3);
  CHECK(all.size() == 64);
  CHECK(std::find(all.begin(), all.end(), cyclic_hw(3)) != all.end());
  CHECK(CandidateSpace(5).size() == 1048576);
  CHECK(CandidateSpace(5).at(0) == zero_candidate(5));
  CHECK_THROWS_AS(CandidateSpace(4), std::invalid_argument);
  CHECK_THROWS_AS(CandidateSpace(9).size(), std::overflow_error);

  // Entries stay in {0, 1/2}.
  std::mt19937_64 rng(0);
  for (int i = 0; i < 20; ++i) {
    const auto c = CandidateSpace(7).sample(rng);
    for (const auto& g : c.generators())
      for (const auto& q : g.translation()) CHECK((q == Rational(0) || q == half));
  }

  std::mt19937_64 a(42), b(42);
  CHECK(CandidateSpace(5).sample(a) == CandidateSpace(5).sample(b));
}
