#include "hw/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "hw/epimorph.hpp"
#include "hw/fpgroup.hpp"
#include "hw/hwgroup.hpp"
#include "hw/serialize.hpp"
#include "hw/survey.hpp"

namespace hw::cli {

namespace {

enum class Format { json, text };

struct RunConfig {
  std::string command;
  std::optional<std::size_t> dim;
  std::optional<std::size_t> k;
  std::optional<std::size_t> r;
  std::optional<std::size_t> n;
  std::string input;
  std::optional<std::size_t> sample;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  bool oracle = false;
  bool print_terms = false;
  std::optional<Format> format;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

HWCandidate load_candidate(const RunConfig& cfg) {
  if (!cfg.input.empty()) return candidate_from_text(read_file(cfg.input));
  if (cfg.dim) return cyclic_hw(*cfg.dim);
  throw UsageError("give --input FILE or --dim N");
}

std::string join_divisors(const std::vector<BigInt>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + d[i].get_str();
  return "(" + s + ")";
}

// --------------------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto c = load_candidate(cfg);
  const auto report = verify_main_theorem(c);
  if (cfg.format.value_or(Format::json) == Format::json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    const std::size_t n = c.dim();
    out << "candidate: dim " << n << "\n";
    for (const auto& g : c.generators()) out << "  " << g.to_string() << "\n";
    out << "crystallographic: " << (report.classification.crystallographic ? "yes" : "no") << "\n";
    out << "hantzsche-wendt: " << (report.classification.hantzsche_wendt ? "yes" : "no") << "\n";
    std::size_t trivial = 0;
    for (const auto& r : report.relators.relators) trivial += r.trivial;
    out << "relators of F(" << n - 1 << ", " << 2 * n << "): " << trivial << "/" << report.relators.relators.size()
        << " trivial\n";
    out << "surjective: " << (report.surjective ? "yes" : "no") << "\n";
    for (const auto& note : report.notes) out << "note: " << note << "\n";
    out << "verdict: " << (report.pass() ? "pass" : "fail") << "\n";
  }
  return report.pass() ? kPass : kMathFailure;
}

int cmd_survey(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.dim) throw UsageError("survey needs --dim");
  SurveyOptions opts;
  opts.dim = *cfg.dim;
  opts.sample = cfg.sample;
  opts.seed = cfg.seed;
  opts.jobs = cfg.jobs;
  opts.oracle = cfg.oracle || opts.dim == 3;
  const bool as_json = cfg.format.value_or(Format::json) == Format::json;
  const auto summary = run_survey(opts, [&](const SurveyRecord& r) {
    if (as_json) {
      out << to_json(r).dump() << "\n";
      return;
    }
    out << "#" << r.index << (r.classification.hantzsche_wendt ? " HW" : "")
        << (r.classification.crystallographic ? " crystallographic" : " not-crystallographic");
    if (r.classification.torsion_free) out << (*r.classification.torsion_free ? " torsion-free" : " torsion");
    if (r.main_theorem) out << " verdict=" << (r.main_theorem->pass() ? "pass" : "fail");
    out << "\n";
  });
  if (as_json) {
    out << to_json(summary).dump() << "\n";
  } else {
    out << "candidates " << summary.candidates << ", crystallographic " << summary.crystallographic
        << ", torsion-free " << summary.torsion_free << ", HW " << summary.hantzsche_wendt
        << ", main-theorem failures " << summary.main_theorem_failures;
    if (summary.oracle_checked)
      out << ", oracle disagreements " << summary.oracle_disagreements << "/" << summary.oracle_checked;
    out << "\n";
  }
  return summary.main_theorem_failures == 0 && summary.oracle_disagreements == 0 ? kPass : kMathFailure;
}

int cmd_symbolic(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.dim) throw UsageError("symbolic needs --dim");
  const std::size_t n = *cfg.dim;
  if (n < 3 || n % 2 == 0) throw UsageError("--dim must be odd and at least 3");
  if (cfg.k && *cfg.k > n - 1) throw UsageError("--k must lie in [0, " + std::to_string(n - 1) + "]");

  std::vector<std::size_t> ks;
  if (cfg.k) {
    ks.push_back(*cfg.k);
  } else {
    for (std::size_t k = 0; k < n; ++k) ks.push_back(k);
  }

  const auto start = std::chrono::steady_clock::now();
  json results = json::array();
  bool all_ok = true;
  std::vector<std::size_t> confirmed;
  for (auto k : ks) {
    const SymSequence seq(n, k);
    const bool periodic = verify_periodicity(seq);
    const bool addrel = verify_addrel(seq);
    all_ok = all_ok && periodic && addrel;
    if (periodic && addrel) confirmed.push_back(k);
    json entry = {{"k", k}, {"periodic", periodic}, {"addrel", addrel}};
    if (cfg.print_terms) {
      json terms = json::array();
      for (const auto& t : seq.terms()) terms.push_back(t.to_string());
      entry["terms"] = terms;
    }
    results.push_back(std::move(entry));
  }
  const auto elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (cfg.format.value_or(Format::text) == Format::json) {
    out << json{{"dim", n}, {"results", results}, {"confirmed", all_ok}}.dump(2) << "\n";
  } else {
    for (const auto& e : results) {
      out << "k=" << e["k"].get<std::size_t>() << ": periodic " << (e["periodic"].get<bool>() ? "yes" : "NO")
          << ", D_{i+n-1} = D_{i-1}^-1 D_{i+n-2}^2 " << (e["addrel"].get<bool>() ? "yes" : "NO") << "\n";
      if (e.contains("terms"))
        for (std::size_t i = 0; i < e["terms"].size(); ++i)
          out << "  D_" << i << " = " << e["terms"][i].get<std::string>() << "\n";
    }
    if (all_ok) {
      out << "period 2n confirmed for k=";
      for (std::size_t i = 0; i < confirmed.size(); ++i) out << (i ? "," : "") << confirmed[i];
      out << "\n";
    } else {
      out << "period 2n NOT confirmed\n";
    }
    out << "runtime " << elapsed << " ms\n";
  }
  return all_ok ? kPass : kMathFailure;
}

int cmd_abelianize(const RunConfig& cfg, std::ostream& out) {
  std::size_t r = 0;
  std::size_t n = 0;
  std::optional<std::size_t> m;
  if (cfg.r && cfg.n) {
    r = *cfg.r;
    n = *cfg.n;
  } else if (cfg.dim) {
    r = *cfg.dim - 1;
    n = 2 * *cfg.dim;
  } else {
    throw UsageError("abelianize needs --r and --n, or --dim");
  }
  if (r == 0 || n == 0) throw UsageError("F(r, n) needs r >= 1 and n >= 1");
  if (n % 2 == 0 && r + 1 == n / 2) m = n / 2;

  const auto divisors = abelianization(fibonacci_presentation(r, n));
  std::vector<BigInt> nontrivial;
  std::size_t even = 0;
  std::size_t free_rank = 0;
  BigInt order = 1;
  for (const auto& d : divisors) {
    if (d == 0) {
      ++free_rank;
    } else if (d != 1) {
      nontrivial.push_back(d);
      order *= d;
    }
    if (d % 2 == 0) ++even;
  }
  const bool consistent = !m || even + 1 >= *m;

  if (cfg.format.value_or(Format::text) == Format::json) {
    json d = json::array();
    for (const auto& x : divisors) d.push_back(x.get_str());
    json nt = json::array();
    for (const auto& x : nontrivial) nt.push_back(x.get_str());
    json j = {{"r", r}, {"n", n}, {"divisors", d}, {"nontrivial", nt}, {"free_rank", free_rank}};
    j["order"] = free_rank ? json(nullptr) : json(order.get_str());
    j["two_rank"] = even;
    if (m) {
      j["hw_dim"] = *m;
      j["consistent"] = consistent;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "F(" << r << ", " << n << ")^ab elementary divisors " << join_divisors(divisors) << "\n";
    if (free_rank)
      out << "infinite: free rank " << free_rank << "\n";
    else if (nontrivial.empty())
      out << "trivial group\n";
    else
      out << "torsion " << join_divisors(nontrivial) << ", order " << order.get_str() << "\n";
    if (m)
      out << "even divisors " << even << " vs m-1 = " << *m - 1 << " for m = " << *m << ": "
          << (consistent ? "consistent" : "INCONSISTENT") << "\n";
  }
  return consistent ? kPass : kMathFailure;
}

int cmd_show(const RunConfig& cfg, std::ostream& out) {
  const auto c = load_candidate(cfg);
  const auto table = holonomy(c);
  const auto lattice = translation_lattice(c, table);
  const auto cls = classify(c);
  const auto images = build_epimorphism(c);

  if (cfg.format.value_or(Format::text) == Format::json) {
    json gens = json::array();
    for (const auto& g : c.generators()) gens.push_back(to_json(g));
    json hol = json::array();
    for (const auto& e : table.entries()) hol.push_back(to_json(e.representative));
    json basis = json::array();
    for (std::size_t r = 0; r < lattice.rank(); ++r) {
      json row = json::array();
      for (const auto& q : lattice.basis_vector(r)) row.push_back(to_json(q));
      basis.push_back(row);
    }
    json imgs = json::array();
    for (const auto& g : images.images()) imgs.push_back(to_json(g));
    out << json{{"candidate", to_json(c)},
                {"generators", gens},
                {"holonomy", hol},
                {"lattice", basis},
                {"classification", to_json(cls)},
                {"epimorphism_images", imgs}}
               .dump(2)
        << "\n";
    return kPass;
  }
  out << "dimension " << c.dim() << "\n";
  out << "generators:\n";
  for (std::size_t i = 0; i < c.generators().size(); ++i)
    out << "  g" << i << " = " << c.generators()[i].to_string() << "\n";
  out << "holonomy (" << table.size() << " elements):\n";
  for (const auto& e : table.entries()) out << "  " << e.representative.to_string() << "\n";
  out << "translation lattice (rank " << lattice.rank() << ", denominator " << lattice.denominator().get_str()
      << "): " << lattice.basis().to_string() << "\n";
  out << "crystallographic: " << (cls.crystallographic ? "yes" : "no") << "\n";
  if (cls.torsion_free) out << "torsion-free: " << (*cls.torsion_free ? "yes" : "no") << "\n";
  out << "hantzsche-wendt: " << (cls.hantzsche_wendt ? "yes" : "no") << "\n";
  out << "images of F(" << c.dim() - 1 << ", " << 2 * c.dim() << ") generators:\n";
  for (std::size_t i = 0; i < images.size(); ++i) out << "  a" << i << " -> " << images[i].to_string() << "\n";
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hantzsche-Wendt groups as quotients of Fibonacci groups F(n-1, 2n)", "hwfib"};
  app.require_subcommand(1);
  RunConfig cfg;
  const std::map<std::string, Format> formats{{"json", Format::json}, {"text", Format::text}};

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats));
  };

  auto* verify = app.add_subcommand("verify", "Check the epimorphism F(n-1, 2n) -> group for one candidate");
  verify->add_option("--input", cfg.input, "Candidate JSON file");
  verify->add_option("--dim", cfg.dim, "Use the cyclic HW group of this dimension");
  add_format(verify);

  auto* survey = app.add_subcommand("survey", "Classify candidates with translations in {0, 1/2}");
  survey->add_option("--dim", cfg.dim, "Dimension")->required();
  survey->add_option("--sample", cfg.sample, "Random sample size instead of full enumeration");
  survey->add_option("--seed", cfg.seed, "Sampling seed");
  survey->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  survey->add_flag("--oracle", cfg.oracle, "Cross-check torsion with the brute-force search (always on for dim 3)");
  add_format(survey);

  auto* symbolic = app.add_subcommand("symbolic", "Symbolic periodicity of the one-dimensional sequences");
  symbolic->add_option("--dim", cfg.dim, "Odd n >= 3")->required();
  symbolic->add_option("--k", cfg.k, "Position of the +1 seed (default: all)");
  symbolic->add_flag("--print", cfg.print_terms, "Print every D_i");
  add_format(symbolic);

  auto* abel = app.add_subcommand("abelianize", "Elementary divisors of F(r, n)^ab");
  abel->add_option("--r", cfg.r, "Relator length minus one");
  abel->add_option("--n", cfg.n, "Number of generators");
  abel->add_option("--dim", cfg.dim, "Shorthand for F(dim-1, 2*dim)");
  add_format(abel);

  auto* show = app.add_subcommand("show", "Print generators, holonomy, lattice and images");
  show->add_option("--input", cfg.input, "Candidate JSON file");
  show->add_option("--dim", cfg.dim, "Use the cyclic HW group of this dimension");
  add_format(show);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  try {
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (survey->parsed()) return cmd_survey(cfg, out);
    if (symbolic->parsed()) return cmd_symbolic(cfg, out);
    if (abel->parsed()) return cmd_abelianize(cfg, out);
    if (show->parsed()) return cmd_show(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace hw::cli
