#pragma once

#include "modulilab/mpoly.hpp"
#include "modulilab/rational.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace modulilab::algebra {

// Canonical text form: terms in descending graded-lex order joined by
// " + " / " - ", e.g. "3/2*a^2*b - c + 5". Parsing accepts exactly the
// shapes this printer emits (plus explicit unit coefficients).
std::string to_string(const MPoly<Rat>& p);
MPoly<Rat> mpoly_from_string(const std::vector<std::string>& vars, const std::string& text);

// JSON form: {"vars": [...], "terms": [{"exp": [...], "coef": "num/den"}]}
// with terms in descending graded-lex order.
nlohmann::json mpoly_to_json(const MPoly<Rat>& p);
MPoly<Rat> mpoly_from_json(const nlohmann::json& j);

}  // namespace modulilab::algebra
