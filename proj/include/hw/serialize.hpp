#pragma once

#include <json.hpp>

#include "hw/epimorph.hpp"
#include "hw/fpgroup.hpp"
#include "hw/hwgroup.hpp"
#include "hw/isometry.hpp"
#include "hw/rational.hpp"

// JSON forms. Rationals are strings "p/q" (or "p"); parse failures throw
// std::invalid_argument.
namespace hw {

using json = nlohmann::ordered_json;

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const DiagIsometry& g);
DiagIsometry isometry_from_json(const json& j);

/// Signed letter codes, +(i+1) for a_i and -(i+1) for its inverse.
json to_json(const Word& w);
Word word_from_json(const json& j);

/// {"dim": n, "translations": [[...], ...]}
json to_json(const HWCandidate& c);
HWCandidate candidate_from_json(const json& j);
HWCandidate candidate_from_text(const std::string& text);

json to_json(const Classification& c);
json to_json(const MainTheoremReport& r);

}  // namespace hw
