#pragma once

#include <string>

#include "qsa/algebra.hpp"

namespace qsa {

/// Element of the Koszul resolution K_p = A (x) Lambda^p(V) (x) A.
/// Degree -1 embeds the algebra itself (empty wedge, unit right slot), so the
/// augmented complex is uniform for the lift machinery.
class KoszulElem {
public:
    struct Key {
        Monomial left;
        ExtIndex wedge;
        Monomial right;
        auto operator<=>(const Key&) const = default;
    };

    KoszulElem(Ctx ctx, int degree) : ctx_(std::move(ctx)), degree_(degree) {}

    static KoszulElem basis(const Ctx& ctx, const ExtIndex& wedge, const Monomial& right);
    static KoszulElem from_algebra(const AlgebraElement& a); // degree -1

    const Ctx& context() const { return ctx_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Scalar>& terms() const { return terms_; }

    void add_term(const Monomial& l, const ExtIndex& w, const Monomial& r, const Scalar& c);
    KoszulElem operator+(const KoszulElem& o) const;
    KoszulElem operator-(const KoszulElem& o) const;
    KoszulElem scaled(const Scalar& c) const;
    KoszulElem left_mul(const Monomial& m) const;  // a . x  (left slot)
    KoszulElem right_mul(const Monomial& m) const; // x . a  (right slot)
    bool operator==(const KoszulElem& o) const {
        return degree_ == o.degree_ && terms_ == o.terms_;
    }

    AlgebraElement to_algebra() const; // degree -1 only

    std::string debug_string() const;

private:
    Ctx ctx_;
    int degree_;
    std::map<Key, Scalar> terms_;
};

/// Element of the normalized bar resolution B_p = A (x) Abar^{(x)p} (x) A;
/// middle entries are nonconstant monomials. Terms acquiring a constant
/// middle entry vanish on insertion. Degree -1 embeds A as for KoszulElem.
class BarElem {
public:
    struct Key {
        Monomial left;
        std::vector<Monomial> word;
        Monomial right;
        auto operator<=>(const Key&) const = default;
    };

    BarElem(Ctx ctx, int degree) : ctx_(std::move(ctx)), degree_(degree) {}

    static BarElem basis(const Ctx& ctx, const std::vector<Monomial>& word,
                         const Monomial& right);
    static BarElem from_algebra(const AlgebraElement& a); // degree -1

    const Ctx& context() const { return ctx_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Scalar>& terms() const { return terms_; }

    void add_term(const Monomial& l, const std::vector<Monomial>& w, const Monomial& r,
                  const Scalar& c);
    BarElem operator+(const BarElem& o) const;
    BarElem operator-(const BarElem& o) const;
    BarElem scaled(const Scalar& c) const;
    BarElem left_mul(const Monomial& m) const;
    BarElem right_mul(const Monomial& m) const;
    bool operator==(const BarElem& o) const {
        return degree_ == o.degree_ && terms_ == o.terms_;
    }

    AlgebraElement to_algebra() const; // degree -1 only

    std::string debug_string() const;

private:
    Ctx ctx_;
    int degree_;
    std::map<Key, Scalar> terms_;
};

/// Koszul differential; degree p >= 1 per the quantum formula, p = 0 is
/// multiplication into the degree -1 embedding.
KoszulElem koszul_d(const KoszulElem& x);

/// Contraction t of the Koszul resolution, extended left-A-linearly from
/// basis elements 1 (x) wedge (x) x^l; t_{-1}(a) = a (x) 1.
KoszulElem koszul_t(const KoszulElem& x);

/// Bar differential (alternating sum of adjacent products, normalized).
BarElem bar_delta(const BarElem& x);

/// Standard contraction s of the normalized bar resolution.
BarElem bar_s(const BarElem& x);

struct HomotopyReport {
    bool ok = true;
    std::string counterexample;
};

/// Checks t_{p-1} d_p + d_{p+1} t_p = Id on each supplied element.
HomotopyReport verify_homotopy_koszul(const std::vector<KoszulElem>& elems);
HomotopyReport verify_homotopy_bar(const std::vector<BarElem>& elems);

} // namespace qsa
