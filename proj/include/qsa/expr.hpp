#pragma once

#include <optional>
#include <string>

#include "qsa/group_extension.hpp"

namespace qsa {

/// Parse failure with a character position into the source text.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    size_t position;
};

/// One parsed additive term of the cocycle grammar
///   scalar-factors * monomial-factors [# g(...)] [^ dx(...)].
struct ParsedTerm {
    Scalar coeff;
    Monomial monomial;
    std::optional<std::vector<int>> group; // absent: trivial group part
    std::vector<int> dx;                   // strictly increasing
};

/// Parses a full cocycle expression (sum of terms). Indices are validated
/// against the context; q-tokens use single-digit indices (q12 = q_{1,2}).
std::vector<ParsedTerm> parse_terms(const Ctx& ctx, const std::string& text);

/// Cochain over the Koszul resolution; all terms must carry the same dx
/// length and no group part.
KoszulCochain parse_koszul_cochain(const Ctx& ctx, const std::string& text);

/// As above with group parts resolved against the given group.
SkewKoszulCochain parse_skew_cochain(const GCtx& grp, const std::string& text);

/// A plain algebra element (no # or ^dx allowed).
AlgebraElement parse_algebra_element(const Ctx& ctx, const std::string& text);

/// A constant scalar value over zeta and rationals (used for q tables and
/// monomial-action coefficients); no x/q/#/dx tokens allowed.
CycNumber parse_cyc_value(int cyclotomic_order, const std::string& text);

/// A coefficient * single-variable image like "-1*x2" (monomial actions).
std::pair<Scalar, int> parse_generator_image(const Ctx& ctx, const std::string& text);

} // namespace qsa
