#pragma once

#include <map>

#include "qsa/complexes.hpp"

namespace qsa {

/// Element of A (x) A with the componentwise product
/// (u (x) v)(u' (x) v') = uu' (x) vv'.
class EnvElem {
public:
    explicit EnvElem(Ctx ctx) : ctx_(std::move(ctx)) {}
    static EnvElem term(const Ctx& ctx, const Monomial& l, const Monomial& r,
                        const Scalar& c = Scalar::one());
    static EnvElem one(const Ctx& ctx);

    const Ctx& context() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<Monomial, Monomial>, Scalar>& terms() const { return terms_; }

    void add_term(const Monomial& l, const Monomial& r, const Scalar& c);
    EnvElem operator+(const EnvElem& o) const;
    EnvElem operator-(const EnvElem& o) const;
    EnvElem operator*(const EnvElem& o) const; // componentwise
    EnvElem scaled(const Scalar& c) const;
    bool operator==(const EnvElem& o) const { return terms_ == o.terms_; }

    /// The A^e-action value sum u_i x^a v_i, for a cochain evaluation.
    AlgebraElement apply_to(const Monomial& a) const;

private:
    Ctx ctx_;
    std::map<std::pair<Monomial, Monomial>, Scalar> terms_;
};

/// Element of A (x) A (x) Lambda^p, the domain convention under which the
/// difference-quotient forms of t and Psi are stated.
class EnvExtElem {
public:
    EnvExtElem(Ctx ctx, int degree) : ctx_(std::move(ctx)), degree_(degree) {}
    static EnvExtElem term(const Ctx& ctx, const Monomial& l, const Monomial& r,
                           const ExtIndex& w, const Scalar& c = Scalar::one());

    const Ctx& context() const { return ctx_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::tuple<Monomial, Monomial, ExtIndex>, Scalar>& terms() const {
        return terms_;
    }

    void add_term(const Monomial& l, const Monomial& r, const ExtIndex& w, const Scalar& c);
    EnvExtElem operator+(const EnvExtElem& o) const;
    bool operator==(const EnvExtElem& o) const {
        return degree_ == o.degree_ && terms_ == o.terms_;
    }

private:
    Ctx ctx_;
    int degree_;
    std::map<std::tuple<Monomial, Monomial, ExtIndex>, Scalar> terms_;
};

/// Koszul -> bar embedding: the signed q_pi-weighted sum over permutations.
BarElem phi(const Ctx& ctx, const ExtIndex& wedge);

/// Bimodule extensions of phi / psi over whole elements.
BarElem apply_phi(const KoszulElem& x);
KoszulElem apply_psi(const BarElem& x);

/// Bar -> Koszul comparison morphism, closed form with the Q / Q-hat split
/// and mu from the twisting principle. Entries must be nonconstant.
KoszulElem psi(const Ctx& ctx, const std::vector<Monomial>& word);

/// The scalar of the defining equation x^{l^1} ... x^{l^p} =
/// mu * (prod_s dq(j_s, x^{l^s}))' x_{j_1} ... x_{j_p}; zero when some
/// factor dq vanishes.
Scalar mu_factorization(const Ctx& ctx, const std::vector<Monomial>& exps,
                        const std::vector<int>& J);

/// tau_j moves the x_j-power of the left slot into the right slot with the
/// twisting-principle coefficient; tau_i tau_j = tau_j tau_i.
EnvElem tau(int j, const EnvElem& x);

/// Quantum difference quotient of a monomial (summation form).
EnvElem dq(const Ctx& ctx, int i, const Monomial& m);
EnvElem dq(int i, const AlgebraElement& a);

/// Isomorphism A (x) A (x) Lambda^p -> A (x) Lambda^p (x) A inserting the
/// twisting coefficient; left-A-linear; invertible.
KoszulElem sigma(const EnvExtElem& x);
EnvExtElem sigma_inv(const KoszulElem& x);

/// The difference-quotient expressions for t and Psi, returned through sigma
/// as Koszul-resolution elements so they compare directly with koszul_t / psi.
KoszulElem t_via_dq(const EnvExtElem& x);
KoszulElem psi_via_dq(const Ctx& ctx, const std::vector<Monomial>& word);

/// Recursive construction of a chain map from a contraction on the target
/// (f_n = t_{n-1} f_{n-1} d_n on basis elements). Memoized images are
/// checked against d f_n = f_{n-1} d at insertion.
class KoszulToBarLift {
public:
    explicit KoszulToBarLift(Ctx ctx) : ctx_(std::move(ctx)) {}
    const BarElem& image(const ExtIndex& wedge);
    /// A-bimodule extension over a whole element.
    BarElem apply(const KoszulElem& x);

private:
    Ctx ctx_;
    std::map<ExtIndex, BarElem> memo_;
};

class BarToKoszulLift {
public:
    explicit BarToKoszulLift(Ctx ctx) : ctx_(std::move(ctx)) {}
    const KoszulElem& image(const std::vector<Monomial>& word);
    KoszulElem apply(const BarElem& x);

private:
    Ctx ctx_;
    std::map<std::vector<Monomial>, KoszulElem> memo_;
};

namespace testing {
/// Fault injection for the verification front end: perturbs the mu
/// coefficient inside psi so failure reporting can be exercised.
void set_psi_mu_fault(bool enabled);
bool psi_mu_fault();
} // namespace testing

} // namespace qsa
