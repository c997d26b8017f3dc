#include "hw/serialize.hpp"

#include <stdexcept>

namespace hw {

json to_json(const Rational& q) { return q.to_string(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::domain_error&) {
      throw std::invalid_argument("zero denominator in " + j.dump());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational must be a string \"p/q\" or an integer, got " + j.dump());
}

json to_json(const DiagIsometry& g) {
  json signs = json::array();
  json trans = json::array();
  for (auto s : g.signs()) signs.push_back(to_int(s));
  for (const auto& q : g.translation()) trans.push_back(to_json(q));
  return {{"signs", signs}, {"translation", trans}};
}

DiagIsometry isometry_from_json(const json& j) {
  if (!j.is_object() || !j.contains("signs") || !j.contains("translation"))
    throw std::invalid_argument("isometry needs \"signs\" and \"translation\"");
  SignVector s;
  Point t;
  for (const auto& v : j.at("signs")) {
    if (!v.is_number_integer()) throw std::invalid_argument("sign must be an integer");
    s.push_back(sign_from_int(v.get<long>()));
  }
  for (const auto& v : j.at("translation")) t.push_back(rational_from_json(v));
  return {std::move(s), std::move(t)};
}

json to_json(const Word& w) { return w.to_signed(); }

Word word_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("word must be an array of signed integers");
  std::vector<long> code;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("word letters must be integers");
    code.push_back(v.get<long>());
  }
  return Word::from_signed(code);
}

json to_json(const HWCandidate& c) {
  json trans = json::array();
  for (const auto& g : c.generators()) {
    json row = json::array();
    for (const auto& q : g.translation()) row.push_back(to_json(q));
    trans.push_back(std::move(row));
  }
  return {{"dim", c.dim()}, {"translations", trans}};
}

HWCandidate candidate_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("candidate must be a JSON object");
  if (!j.contains("dim") || !j.at("dim").is_number_unsigned())
    throw std::invalid_argument("candidate needs a nonnegative integer \"dim\"");
  if (!j.contains("translations") || !j.at("translations").is_array())
    throw std::invalid_argument("candidate needs a \"translations\" array");
  const auto n = j.at("dim").get<std::size_t>();
  std::vector<Point> t;
  for (const auto& row : j.at("translations")) {
    if (!row.is_array()) throw std::invalid_argument("each translation must be an array");
    Point p;
    for (const auto& v : row) p.push_back(rational_from_json(v));
    t.push_back(std::move(p));
  }
  return build_candidate(n, std::move(t));
}

HWCandidate candidate_from_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return candidate_from_json(j);
}

json to_json(const Classification& c) {
  json j = {{"crystallographic", c.crystallographic}};
  j["torsion_free"] = c.torsion_free ? json(*c.torsion_free) : json(nullptr);
  j["holonomy_size"] = c.holonomy_size;
  j["holonomy_in_sl"] = c.holonomy_in_sl;
  j["hw"] = c.hantzsche_wendt;
  return j;
}

json to_json(const MainTheoremReport& r) {
  json rel = json::array();
  for (const auto& c : r.relators.relators) rel.push_back({{"index", c.index}, {"trivial", c.trivial}});
  return {{"candidate", to_json(r.candidate)},
          {"classification", to_json(r.classification)},
          {"relators", rel},
          {"surjective", r.surjective},
          {"routes_agree", r.routes_agree},
          {"epimorphism", r.epimorphism()},
          {"notes", r.notes},
          {"verdict", r.pass() ? "pass" : "fail"}};
}

}  // namespace hw
