#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "qsa/scalar.hpp"

namespace qsa {

enum class QMode { Symbolic, Specialized };

/// Ambient data of a quantum symmetric algebra S_q(V): the generator count,
/// the coefficient field Q(zeta_n), and how the q_{ij} are interpreted.
/// Only the slots i<j are stored; q_ii = 1 and q_ji = q_ij^{-1} hold by
/// construction.
class QContext {
public:
    /// Symbolic mode: the q_{ij} stay formal Laurent variables.
    static std::shared_ptr<const QContext> symbolic(int N, int cyclotomic_order = 1);

    /// Specialized mode: q_{ij} (i<j) take the given nonzero values.
    static std::shared_ptr<const QContext> specialized(int N, int cyclotomic_order,
                                                       std::vector<CycNumber> qvals);

    /// All q_{ij} = 1; the polynomial-ring case.
    static std::shared_ptr<const QContext> classical(int N, int cyclotomic_order = 1);

    int generators() const { return N_; }
    int slots() const { return N_ * (N_ - 1) / 2; }
    int cyclotomic_order() const { return cyc_order_; }
    QMode mode() const { return mode_; }
    bool symbolic_mode() const { return mode_ == QMode::Symbolic; }
    bool is_classical() const; // specialized with every q_{ij} = 1

    /// q_{ij}^e as a Scalar; i and j in 1..N, any order, i == j gives 1.
    Scalar q_power(int i, int j, long e) const;
    /// prod q^{exponents} for a full slot-exponent vector.
    Scalar q_monomial(const QExp& e) const;

    Scalar cyc(const CycNumber& c) const { return Scalar::from_cyc(c); }
    Scalar rational(const Rational& r) const { return Scalar::from_rational(r); }
    Scalar one() const { return Scalar::one(); }
    CycNumber zeta(long k) const { return CycNumber::zeta_power(cyc_order_, k); }

    /// Evaluate a scalar from a symbolic context of the same shape in this
    /// specialized context.
    Scalar specialize(const Scalar& s) const;

private:
    QContext(int N, QMode mode, int cyc_order, std::vector<CycNumber> qvals);

    int N_;
    QMode mode_;
    int cyc_order_;
    std::vector<CycNumber> qvals_; // per slot, present iff specialized
};

using Ctx = std::shared_ptr<const QContext>;

inline void require_same_context(const Ctx& a, const Ctx& b) {
    if (a.get() != b.get()) throw std::invalid_argument("operands built over different contexts");
}

} // namespace qsa
