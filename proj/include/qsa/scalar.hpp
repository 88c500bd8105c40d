#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsa/cyclotomic.hpp"

namespace qsa {

/// Exponent vector over the parameters q_{ij}, i<j, flattened row-major
/// ((1,2),(1,3),...,(1,N),(2,3),...). Canonical form has no trailing zeros,
/// so scalars of different generator counts share a representation.
using QExp = std::vector<int>;

int qexp_slot(int N, int i, int j); // i < j, both 1-based

/// A Laurent polynomial in the q_{ij} with coefficients in Q(zeta_n).
/// Canonical: no zero coefficients, keys trimmed. In a specialized context
/// every scalar that arises has the empty exponent vector.
class Scalar {
public:
    Scalar() = default;

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return from_cyc(CycNumber::from_rational(1)); }
    static Scalar from_cyc(const CycNumber& c);
    static Scalar from_rational(const Rational& r) { return from_cyc(CycNumber::from_rational(r)); }
    static Scalar term(QExp e, const CycNumber& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_single_term() const { return terms_.size() == 1; }
    /// Constant in the q's (possibly zero).
    bool is_constant() const;
    CycNumber constant_value() const; // requires is_constant()

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);

    /// Multiplicative inverse of a one-term scalar (all twist coefficients,
    /// q_pi, lambda, mu are of this shape). Throws on anything else.
    Scalar inverse_unit() const;

    bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    const std::map<QExp, CycNumber>& terms() const { return terms_; }

    /// Deterministic text form over grammar tokens, e.g. "q12^-1", "-2*q13*q23^2",
    /// "1/2+1/2*zeta". Multi-term scalars print as sums.
    std::string to_string(int N) const;

    /// The additive pieces of to_string as (negated, product-body) pairs;
    /// each body is a plain product the expression grammar accepts.
    std::vector<std::pair<bool, std::string>> atomic_pieces(int N) const;

private:
    void prune();
    std::map<QExp, CycNumber> terms_;
};

} // namespace qsa
