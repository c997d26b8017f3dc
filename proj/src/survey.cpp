#include "hw/survey.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hw {

SurveyRecord survey_one(std::uint64_t index, const HWCandidate& c, bool oracle) {
  SurveyRecord r{index, c, classify(c), std::nullopt, std::nullopt};
  if (oracle && r.classification.crystallographic) r.oracle_torsion_free = torsion_oracle(c);
  if (r.classification.hantzsche_wendt) r.main_theorem = verify_main_theorem(c);
  return r;
}

namespace {

constexpr std::size_t kChunk = 2048;

void process_chunk(std::vector<SurveyRecord>& out, const std::vector<std::pair<std::uint64_t, HWCandidate>>& work,
                   bool oracle, std::size_t jobs) {
  out.assign(work.size(), SurveyRecord{0, work.front().second, {}, {}, {}});
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < work.size(); i = next++)
      out[i] = survey_one(work[i].first, work[i].second, oracle);
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, work.size());
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
}

}  // namespace

SurveySummary run_survey(const SurveyOptions& opts, const std::function<void(const SurveyRecord&)>& sink) {
  const CandidateSpace space(opts.dim);
  if (!opts.sample && opts.dim > kMaxFullSurveyDim)
    throw std::invalid_argument("full enumeration is limited to dimension " + std::to_string(kMaxFullSurveyDim) +
                                "; pass --sample for dimension " + std::to_string(opts.dim));
  const std::uint64_t total = opts.sample ? *opts.sample : space.size();
  std::mt19937_64 rng(opts.seed);

  SurveySummary summary;
  summary.dim = opts.dim;
  std::vector<std::pair<std::uint64_t, HWCandidate>> work;
  std::vector<SurveyRecord> results;
  for (std::uint64_t start = 0; start < total; start += kChunk) {
    const std::uint64_t stop = std::min<std::uint64_t>(total, start + kChunk);
    work.clear();
    for (std::uint64_t i = start; i < stop; ++i)
      work.emplace_back(i, opts.sample ? space.sample(rng) : space.at(i));
    process_chunk(results, work, opts.oracle, opts.jobs);
    for (const auto& r : results) {
      ++summary.candidates;
      const auto& c = r.classification;
      summary.crystallographic += c.crystallographic;
      summary.torsion_free += c.torsion_free.value_or(false);
      summary.hantzsche_wendt += c.hantzsche_wendt;
      if (r.main_theorem && !r.main_theorem->pass()) ++summary.main_theorem_failures;
      if (r.oracle_torsion_free) {
        ++summary.oracle_checked;
        if (*r.oracle_torsion_free != c.torsion_free) ++summary.oracle_disagreements;
      }
      sink(r);
    }
  }
  return summary;
}

json to_json(const SurveyRecord& r) {
  json j = {{"index", r.index}, {"translations", to_json(r.candidate).at("translations")}};
  const auto cls = to_json(r.classification);
  for (const auto& [k, v] : cls.items()) j[k] = v;
  if (r.oracle_torsion_free) j["oracle_agrees"] = (*r.oracle_torsion_free == r.classification.torsion_free);
  if (r.main_theorem) {
    j["epimorphism"] = r.main_theorem->epimorphism();
    j["verdict"] = r.main_theorem->pass() ? "pass" : "fail";
  }
  return j;
}

json to_json(const SurveySummary& s) {
  return {{"summary",
           {{"dim", s.dim},
            {"candidates", s.candidates},
            {"crystallographic", s.crystallographic},
            {"torsion_free", s.torsion_free},
            {"hw", s.hantzsche_wendt},
            {"main_theorem_failures", s.main_theorem_failures},
            {"oracle_checked", s.oracle_checked},
            {"oracle_disagreements", s.oracle_disagreements}}}};
}

}  // namespace hw
