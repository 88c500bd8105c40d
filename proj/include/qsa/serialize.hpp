#pragma once

#include <json.hpp>

#include "qsa/group_extension.hpp"

namespace qsa {

using Json = nlohmann::ordered_json;

/// Canonical expression strings; parse(to_expression(x)) == x.
std::string to_expression(const KoszulCochain& x);
std::string to_expression(const SkewKoszulCochain& x);

/// Term arrays matching the documented output schema
/// {"coeff", "monomial", ["group"], "dx"}.
Json cochain_json(const KoszulCochain& x);
Json cochain_json(const SkewKoszulCochain& x);

Json algebra_json(const AlgebraElement& x);
Json env_json(const EnvElem& x);      // entries {"coeff","left","right"}
Json koszul_json(const KoszulElem& x); // entries {"coeff","left","dx","right"}
Json bar_json(const BarElem& x);       // entries {"coeff","left","word","right"}

} // namespace qsa
