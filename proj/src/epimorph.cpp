#include "hw/epimorph.hpp"

#include <stdexcept>

namespace hw {

SymSequence::SymSequence(std::size_t n, std::size_t k) : n_(n), k_(k) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("n must be odd and at least 3");
  if (k > n - 1) throw std::invalid_argument("k must lie in [0, n-1]");
  std::vector<SymIsometry1> seeds;
  seeds.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    seeds.push_back({i == k ? Sign::plus : Sign::minus, LinForm::symbol(i)});
  terms_ = fibonacci_extend(std::move(seeds), 3 * n - 1);
}

SymSequence symbolic_sequence(std::size_t n, std::size_t k) { return SymSequence(n, k); }

bool verify_periodicity(const SymSequence& seq) {
  const std::size_t n = seq.n();
  for (std::size_t j = 0; j + 1 < n; ++j)
    if (seq[2 * n + j] != seq[j]) return false;
  return true;
}

bool verify_periodicity(std::size_t n, std::size_t k) { return verify_periodicity(SymSequence(n, k)); }

bool verify_addrel(const SymSequence& seq) {
  const std::size_t n = seq.n();
  for (std::size_t i = 1; i <= 2 * n - 1; ++i) {
    const auto& sq = seq[i + n - 2];
    if (seq[i + n - 1] != compose(inverse(seq[i - 1]), compose(sq, sq))) return false;
  }
  return true;
}

bool verify_addrel(std::size_t n, std::size_t k) { return verify_addrel(SymSequence(n, k)); }

GenImages<DiagIsometry> component_images(const HWCandidate& c, std::size_t j) {
  if (j >= c.dim()) throw std::out_of_range("coordinate out of range");
  std::vector<DiagIsometry> out;
  out.reserve(c.generators().size());
  for (const auto& g : c.generators()) {
    const AxisPart p = component(g, j);
    out.push_back(direct_sum(std::span(&p, 1)));
  }
  return GenImages<DiagIsometry>(std::move(out));
}

GenImages<DiagIsometry> build_epimorphism(const HWCandidate& c) {
  return GenImages<DiagIsometry>(fibonacci_extend(c.generators(), 2 * c.dim()));
}

GenImages<DiagIsometry> build_epimorphism_by_components(const HWCandidate& c) {
  const std::size_t n = c.dim();
  std::vector<std::vector<DiagIsometry>> axes;
  axes.reserve(n);
  for (std::size_t j = 0; j < n; ++j) axes.push_back(fibonacci_extend(component_images(c, j).images(), 2 * n));
  std::vector<DiagIsometry> images;
  images.reserve(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    std::vector<AxisPart> parts;
    parts.reserve(n);
    for (std::size_t j = 0; j < n; ++j) parts.push_back(component(axes[j][i], 0));
    images.push_back(direct_sum(parts));
  }
  return GenImages<DiagIsometry>(std::move(images));
}

MainTheoremReport verify_main_theorem(const HWCandidate& c) {
  const std::size_t n = c.dim();
  MainTheoremReport report{c, classify(c), {}, false, false, {}};

  const auto images = build_epimorphism(c);
  report.relators = verify_relators(fibonacci_presentation(n - 1, 2 * n), images);

  report.surjective = true;
  for (std::size_t i = 0; i + 1 < n; ++i)
    report.surjective = report.surjective && images[i] == c.generators()[i];

  report.routes_agree = build_epimorphism_by_components(c).images() == images.images();

  const auto& cls = report.classification;
  if (!cls.crystallographic) report.notes.push_back("not crystallographic: translation lattice has rank below dimension");
  if ((cls.torsion_free && !*cls.torsion_free) || (!cls.torsion_free && torsion_witness(c)))
    report.notes.push_back("not torsion-free: the group contains elements of finite order");
  if (!cls.hantzsche_wendt) report.notes.push_back("candidate is not a Hantzsche-Wendt group");
  if (!report.relators.pass) report.notes.push_back("some relators of F(n-1, 2n) are nontrivial");
  if (!report.routes_agree) report.notes.push_back("E(n) recursion and direct-sum route disagree");
  return report;
}

}  // namespace hw
