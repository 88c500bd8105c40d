#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qsa/context.hpp"

namespace qsa {

/// Exponent vector in N^N; x^l in normal order x_1^{l_1} ... x_N^{l_N}.
struct Monomial {
    std::vector<int> e;

    static Monomial unit(int N) { return Monomial{std::vector<int>(N, 0)}; }
    static Monomial gen(int N, int i); // x_i, 1-based

    int degree() const;
    bool is_constant() const { return degree() == 0; }
    Monomial plus(const Monomial& o) const;

    auto operator<=>(const Monomial&) const = default;
};

/// A word in the generators (1-based indices), read left to right.
using Word = std::vector<int>;

Word word_of(const Monomial& m);
Monomial monomial_of_word(int N, const Word& w);

/// Per-slot q-exponents collected while normal-ordering a word: each
/// inversion (value a before value b, a > b) contributes q_{a,b} = q_{b,a}^{-1}.
QExp inversion_exponents(int N, const Word& w);

/// (c, m) with c * x^m equal to the product of the word's generators.
std::pair<Scalar, Monomial> twist_reorder(const Ctx& ctx, const Word& w);

/// The twisting-principle coefficient: product(from) = c * product(to).
/// Both words must be rearrangements of the same multiset.
Scalar twist_between(const Ctx& ctx, const Word& from, const Word& to);

/// Finite sum of Scalar * Monomial, canonical (no zero terms).
class AlgebraElement {
public:
    explicit AlgebraElement(Ctx ctx) : ctx_(std::move(ctx)) {}
    static AlgebraElement monomial(const Ctx& ctx, const Monomial& m,
                                   const Scalar& c = Scalar::one());
    static AlgebraElement one(const Ctx& ctx);

    const Ctx& context() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    int size() const { return static_cast<int>(terms_.size()); }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Scalar& c);
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement scaled(const Scalar& c) const;
    bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

    /// Degree-0 part stripped; the image in A-bar = A / k.1.
    AlgebraElement reduced_mod_constants() const;

private:
    Ctx ctx_;
    std::map<Monomial, Scalar> terms_;
};

/// Product in S_q(V): bilinear extension of x^m * x^m' = twist * x^{m+m'}.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
std::pair<Scalar, Monomial> multiply_monomials(const Ctx& ctx, const Monomial& a,
                                               const Monomial& b);

/// Strictly increasing index tuple as a bitmask (bit i-1 = generator i).
struct ExtIndex {
    uint32_t mask = 0;

    int size() const;
    std::vector<int> indices() const;
    bool contains(int i) const { return (mask >> (i - 1)) & 1u; }
    static ExtIndex of(const std::vector<int>& increasing);

    auto operator<=>(const ExtIndex&) const = default;
};

/// Result of normal-ordering a wedge word in the quantum exterior algebra
/// Lambda_{q^{-1}}(V*): zero on a repeated index, otherwise coefficient and
/// sorted index set.
struct ExtResult {
    bool zero = true;
    Scalar coeff;
    ExtIndex index;
};

/// Relations (dx_i)^2 = 0 and dx_i dx_j = -q_{ij}^{-1} dx_j dx_i.
ExtResult ext_reorder(const Ctx& ctx, const std::vector<int>& indices);

/// The scalar with q_pi * x_{i_pi(1)} ... x_{i_pi(p)} = x_{i_1} ... x_{i_p}
/// for an increasing tuple I and a permutation pi of {0,...,p-1}.
Scalar q_pi(const Ctx& ctx, const std::vector<int>& I, const std::vector<int>& pi);

} // namespace qsa
