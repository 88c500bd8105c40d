#pragma once

#include <memory>
#include <optional>
#include <variant>

#include "qsa/algebra.hpp"

namespace qsa {

/// Element of a finite abelian group given by cyclic orders; exponent vector
/// reduced componentwise.
struct GroupElement {
    std::vector<int> v;
    auto operator<=>(const GroupElement&) const = default;
};

/// Diagonal action: chi_exp[i][j] is the exponent e with g_j . x_{i+1} =
/// zeta^e x_{i+1}; an N x k matrix of character exponents mod n.
struct DiagonalAction {
    std::vector<std::vector<int>> chi_exp;
};

/// Monomial-matrix action: per generator, the image of each x_i is a scalar
/// multiple of a single generator.
struct MonomialImage {
    Scalar coeff;
    int target = 0;
};
struct MonomialAction {
    std::vector<std::vector<MonomialImage>> images; // [generator][variable]
};

using ActionSpec = std::variant<DiagonalAction, MonomialAction>;

/// A finite abelian group acting on S_q(V); immutable and shared.
class GroupData : public std::enable_shared_from_this<GroupData> {
public:
    static std::shared_ptr<const GroupData> make(Ctx ctx, std::vector<int> orders,
                                                 ActionSpec action);
    /// The trivial group acting trivially.
    static std::shared_ptr<const GroupData> trivial(Ctx ctx);

    const Ctx& context() const { return ctx_; }
    const std::vector<int>& orders() const { return orders_; }
    int group_order() const;
    bool diagonal() const { return std::holds_alternative<DiagonalAction>(action_); }
    const ActionSpec& action() const { return action_; }

    GroupElement identity() const;
    GroupElement reduce(GroupElement g) const;
    GroupElement compose(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& g) const;
    std::vector<GroupElement> elements() const;

    /// chi_i(g); diagonal actions only.
    CycNumber chi(int i, const GroupElement& g) const;
    /// chi_l(g) = prod chi_i(g)^{l_i}.
    CycNumber chi_monomial(const Monomial& l, const GroupElement& g) const;
    CycNumber chi_index(const ExtIndex& I, const GroupElement& g) const;

    /// g . x^m as (coefficient, monomial); valid for both action kinds.
    std::pair<Scalar, Monomial> act_monomial(const GroupElement& g, const Monomial& m) const;
    AlgebraElement act(const GroupElement& g, const AlgebraElement& a) const;

    /// g . dx_I with the dual action, normal-ordered in the quantum
    /// exterior algebra.
    ExtResult act_ext(const GroupElement& g, const ExtIndex& I) const;

private:
    GroupData(Ctx ctx, std::vector<int> orders, ActionSpec action);
    /// For one generator applied once: image of x_i.
    MonomialImage gen_image(int gen, int i) const;

    Ctx ctx_;
    std::vector<int> orders_;
    ActionSpec action_;
};

using GCtx = std::shared_ptr<const GroupData>;

/// Sum of Scalar * (x^m # g), canonical; an element of A x| G.
class SkewElement {
public:
    explicit SkewElement(GCtx g) : grp_(std::move(g)) {}
    static SkewElement term(const GCtx& g, const Monomial& m, const GroupElement& h,
                            const Scalar& c = Scalar::one());

    const GCtx& group() const { return grp_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<Monomial, GroupElement>, Scalar>& terms() const { return terms_; }

    void add_term(const Monomial& m, const GroupElement& h, const Scalar& c);
    SkewElement operator+(const SkewElement& o) const;
    SkewElement operator-(const SkewElement& o) const;
    SkewElement scaled(const Scalar& c) const;
    bool operator==(const SkewElement& o) const { return terms_ == o.terms_; }

private:
    GCtx grp_;
    std::map<std::pair<Monomial, GroupElement>, Scalar> terms_;
};

/// (a # g)(b # h) = a (g.b) # gh, extended bilinearly.
SkewElement skew_multiply(const SkewElement& u, const SkewElement& v);

struct ActionViolation {
    std::string message;
};

/// Checks that generator images preserve the relations x_i x_j = q_ij x_j x_i
/// and respect the declared cyclic orders. Empty result means valid.
std::optional<ActionViolation> validate_action(const GCtx& grp);

} // namespace qsa
