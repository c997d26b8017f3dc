#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "hw/epimorph.hpp"
#include "hw/hwgroup.hpp"
#include "hw/serialize.hpp"

namespace hw {

struct SurveyOptions {
  std::size_t dim = 3;
  std::optional<std::size_t> sample;  // empty: full enumeration
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  bool oracle = false;  // cross-check torsion with the brute-force search
};

struct SurveyRecord {
  std::uint64_t index = 0;
  HWCandidate candidate;
  Classification classification;
  std::optional<bool> oracle_torsion_free;        // set when the oracle ran
  std::optional<MainTheoremReport> main_theorem;  // set for HW candidates
};

struct SurveySummary {
  std::size_t dim = 0;
  std::uint64_t candidates = 0;
  std::uint64_t crystallographic = 0;
  std::uint64_t torsion_free = 0;
  std::uint64_t hantzsche_wendt = 0;
  std::uint64_t main_theorem_failures = 0;
  std::uint64_t oracle_checked = 0;
  std::uint64_t oracle_disagreements = 0;
};

/// Largest dimension enumerated in full without an explicit sample size.
inline constexpr std::size_t kMaxFullSurveyDim = 5;

/// Classifies each candidate and, for HW ones, verifies the epimorphism.
/// Records reach `sink` in enumeration order whatever `jobs` is. Throws
/// std::invalid_argument for a full survey above kMaxFullSurveyDim.
SurveySummary run_survey(const SurveyOptions& opts, const std::function<void(const SurveyRecord&)>& sink);

SurveyRecord survey_one(std::uint64_t index, const HWCandidate& c, bool oracle);

json to_json(const SurveyRecord& r);
json to_json(const SurveySummary& s);

}  // namespace hw
