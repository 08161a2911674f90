#pragma once

// Text and JSON forms of sets, sequences, ideals and graded ideals.

#include <string>

#include "json.hpp"
#include "monfact/families.hpp"
#include "monfact/graded_ideal.hpp"
#include "monfact/monomial_ideal.hpp"
#include "monfact/nat_set.hpp"

namespace monfact::io {

using Json = nlohmann::ordered_json;

/// Accepts "0,1,4", "{0,1,4}", "[0,1,4]" (whitespace ignored).
NatSet parse_natset(const std::string& text);
Json to_json(const NatSet& s);
NatSet natset_from_json(const Json& j);

/// Accepts "1,3,7" or "[1,3,7]"; the sequence is validated.
SumSequence parse_sequence(const std::string& text);
Json to_json(const SumSequence& seq);

/// Accepts the text form "X^4, X^3 Y, X^2 Y^2, Y^4" (optionally wrapped in
/// <...>, factors may be joined by '*'), "1" for the unit ideal, or the JSON
/// form {"gens": [[x, y], ...]}.
MonIdeal parse_ideal(const std::string& text);
Json to_json(const MonIdeal& ideal);
MonIdeal ideal_from_json(const Json& j);

/// {"deg": t, "coeffs": ["1", "-1/2", ...]}
Json to_json(const HomPoly& f);
HomPoly hompoly_from_json(const Json& j);
/// {"gens": [...]}
Json to_json(const GradedIdeal2& ideal);
GradedIdeal2 graded_from_json(const Json& j);

}  // namespace monfact::io
