#pragma once

#include "qsa/brackets.hpp"
#include "qsa/group.hpp"

namespace qsa {

/// Cochain for A x| G over the Koszul resolution: sum of
/// Scalar * (x^a # g (x) dx_b).
class SkewKoszulCochain {
public:
    SkewKoszulCochain(GCtx grp, int degree) : grp_(std::move(grp)), degree_(degree) {}
    static SkewKoszulCochain basis(const GCtx& grp, const Monomial& a, const GroupElement& g,
                                   const ExtIndex& b, const Scalar& c = Scalar::one());

    const GCtx& group() const { return grp_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::tuple<Monomial, GroupElement, ExtIndex>, Scalar>& terms() const {
        return terms_;
    }

    void add_term(const Monomial& a, const GroupElement& g, const ExtIndex& b, const Scalar& c);
    SkewKoszulCochain operator+(const SkewKoszulCochain& o) const;
    SkewKoszulCochain operator-(const SkewKoszulCochain& o) const;
    SkewKoszulCochain scaled(const Scalar& c) const;
    bool operator==(const SkewKoszulCochain& o) const {
        return degree_ == o.degree_ && terms_ == o.terms_;
    }

    std::string debug_string() const;

private:
    GCtx grp_;
    int degree_;
    std::map<std::tuple<Monomial, GroupElement, ExtIndex>, Scalar> terms_;
};

/// Bar-level cochain for A x| G: evaluator on words of (monomial # group)
/// pairs, multilinear in the monomial slots.
struct SkewBarCochain {
    GCtx grp;
    int degree = 0;
    std::function<SkewElement(const std::vector<std::pair<Monomial, GroupElement>>&)> eval;
};

/// The differential on (A x| G) (x) Lambda(V*) for diagonal actions.
SkewKoszulCochain skew_diff(const SkewKoszulCochain& x);

/// h . (x^l # g (x) dx_I); conjugation is trivial for the abelian groups
/// handled here, monomial actions permute the dx part.
SkewKoszulCochain cochain_group_action(const GroupElement& h, const SkewKoszulCochain& x);

/// Membership in C_g: for each i either c_i = -1 or
/// prod_s q_{is}^{c_s} = chi_i(g). Diagonal actions only.
bool cg_membership(const GCtx& grp, const std::vector<int>& gamma, const GroupElement& g);

/// Basis cocycles x^a # g (x) dx_b with |b| = m, a - b in C_g, |a| <= cap.
std::vector<SkewKoszulCochain> hh_skew_basis(const GCtx& grp, int m, int cap);

/// Group averaging; idempotent projection onto invariants.
SkewKoszulCochain reynolds(const SkewKoszulCochain& x);

bool is_invariant(const SkewKoszulCochain& x);

/// The chain map onto bar-level cochains (unwinds the group action through
/// the resolution identification, then applies Psi and the cochain).
/// Input must be G-invariant.
SkewBarCochain theta(const SkewKoszulCochain& alpha);

/// The reverse chain map: evaluate on permuted generator words with q_pi
/// weights and reassemble over the wedge basis.
SkewKoszulCochain gamma(const SkewBarCochain& f, int p);

SkewBarCochain circle_skew(const SkewBarCochain& f, const SkewBarCochain& g, int k);
SkewBarCochain bracket_skew_bar(const SkewBarCochain& f, const SkewBarCochain& g);

/// Bracket of two invariant cocycles through the bar level.
SkewKoszulCochain bracket_skew_pipeline(const SkewKoszulCochain& alpha,
                                        const SkewKoszulCochain& beta);

/// Closed form for diagonal actions, on unaveraged basis cocycles: computes
/// the bracket of their Reynolds images.
SkewKoszulCochain bracket_skew_closed(const SkewKoszulCochain& alpha,
                                      const SkewKoszulCochain& beta);

/// Solves skew_diff(y) = x stratum by stratum with exact linear algebra.
/// Requires a specialized scalar context.
bool is_coboundary(const SkewKoszulCochain& x);

/// Bracket cochains over the trivial group embed as plain Koszul cochains.
KoszulCochain forget_group(const SkewKoszulCochain& x);
SkewKoszulCochain with_trivial_group(const GCtx& grp, const KoszulCochain& x);

} // namespace qsa
