#pragma once

#include <functional>

#include "qsa/chainmaps.hpp"

namespace qsa {

/// Cohomology representative: sum of Scalar * (x^a (x) dx_b) inside
/// A (x) Lambda_{q^{-1}}(V*).
class KoszulCochain {
public:
    KoszulCochain(Ctx ctx, int degree) : ctx_(std::move(ctx)), degree_(degree) {}
    static KoszulCochain basis(const Ctx& ctx, const Monomial& a, const ExtIndex& b,
                               const Scalar& c = Scalar::one());

    const Ctx& context() const { return ctx_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<Monomial, ExtIndex>, Scalar>& terms() const { return terms_; }

    void add_term(const Monomial& a, const ExtIndex& b, const Scalar& c);
    KoszulCochain operator+(const KoszulCochain& o) const;
    KoszulCochain operator-(const KoszulCochain& o) const;
    KoszulCochain scaled(const Scalar& c) const;
    bool operator==(const KoszulCochain& o) const {
        return degree_ == o.degree_ && terms_ == o.terms_;
    }

    std::string debug_string() const;

private:
    Ctx ctx_;
    int degree_;
    std::map<std::pair<Monomial, ExtIndex>, Scalar> terms_;
};

/// Normalized bar cochain as an evaluator on words of nonconstant monomials;
/// multilinear extension is the caller's concern (values flow through
/// AlgebraElement terms).
struct BarCochain {
    enum class Origin { ClosedForm, FromKoszul, Composite };

    Ctx ctx;
    int degree = 0;
    Origin origin = Origin::ClosedForm;
    std::function<AlgebraElement(const std::vector<Monomial>&)> eval;
};

/// Insert g at slot k of f (1-based, k <= deg f); the inner value is taken
/// in A-bar (constant component dropped).
BarCochain circle(const BarCochain& f, const BarCochain& g, int k);

/// Gerstenhaber bracket on bar cochains: the signed sum of circle products.
BarCochain bracket_bar(const BarCochain& f, const BarCochain& g);

/// Membership in the set C cutting out HH(S_q(V)): for each i either
/// gamma_i = -1 or prod_s q_{is}^{gamma_s} = 1.
bool c_membership(const Ctx& ctx, const std::vector<int>& gamma);

/// All basis cocycles x^a (x) dx_b with |b| = m, a - b in C, |a| <= cap.
std::vector<KoszulCochain> hh_basis(const Ctx& ctx, int m, int cap);

/// alpha . Psi as a bar cochain.
BarCochain from_koszul(const KoszulCochain& alpha);

/// Evaluate f on the Phi-images of the wedge basis and reassemble.
KoszulCochain to_koszul(const BarCochain& f, int r);

/// [alpha, beta] computed through the bar resolution.
KoszulCochain bracket_pipeline(const KoszulCochain& alpha, const KoszulCochain& beta);

/// The closed-form bracket on basis cocycles: difference-quotient terms with
/// coefficients assembled from ext-reordering and the mu factorizations.
KoszulCochain bracket_closed(const KoszulCochain& alpha, const KoszulCochain& beta);

/// Textbook Schouten-Nijenhuis bracket of polyvector fields by partial
/// derivative calculus; classical contexts (all q_{ij} = 1) only.
KoszulCochain schouten_classical(const KoszulCochain& alpha, const KoszulCochain& beta);

/// Push a cochain from a symbolic context into a specialized one.
KoszulCochain specialize(const Ctx& target, const KoszulCochain& alpha);

} // namespace qsa
