#include "qsa/context.hpp"

#include <stdexcept>

namespace qsa {

QContext::QContext(int N, QMode mode, int cyc_order, std::vector<CycNumber> qvals)
    : N_(N), mode_(mode), cyc_order_(cyc_order), qvals_(std::move(qvals)) {
    if (N < 1) throw std::invalid_argument("QContext: need at least one generator");
    if (cyc_order < 1) throw std::invalid_argument("QContext: cyclotomic order must be >= 1");
    if (mode_ == QMode::Specialized) {
        if (static_cast<int>(qvals_.size()) != slots())
            throw std::invalid_argument("QContext: wrong number of q values");
        for (const auto& v : qvals_)
            if (v.is_zero())
                throw std::invalid_argument("QContext: specialized q values must be invertible");
    }
}

std::shared_ptr<const QContext> QContext::symbolic(int N, int cyclotomic_order) {
    return std::shared_ptr<const QContext>(
        new QContext(N, QMode::Symbolic, cyclotomic_order, {}));
}

std::shared_ptr<const QContext> QContext::specialized(int N, int cyclotomic_order,
                                                      std::vector<CycNumber> qvals) {
    return std::shared_ptr<const QContext>(
        new QContext(N, QMode::Specialized, cyclotomic_order, std::move(qvals)));
}

std::shared_ptr<const QContext> QContext::classical(int N, int cyclotomic_order) {
    std::vector<CycNumber> ones(N * (N - 1) / 2,
                                CycNumber::from_rational(1, cyclotomic_order));
    return specialized(N, cyclotomic_order, std::move(ones));
}

bool QContext::is_classical() const {
    if (mode_ != QMode::Specialized) return false;
    for (const auto& v : qvals_)
        if (!v.is_one()) return false;
    return true;
}

Scalar QContext::q_power(int i, int j, long e) const {
    if (i == j || e == 0) return one();
    long exp = e;
    if (i > j) {
        std::swap(i, j);
        exp = -exp;
    }
    if (mode_ == QMode::Symbolic) {
        QExp key(qexp_slot(N_, i, j) + 1, 0);
        key.back() = static_cast<int>(exp);
        return Scalar::term(std::move(key), CycNumber::from_rational(1, cyc_order_));
    }
    return Scalar::from_cyc(qvals_[qexp_slot(N_, i, j)].pow(exp));
}

Scalar QContext::q_monomial(const QExp& e) const {
    if (mode_ == QMode::Symbolic) {
        QExp key = e;
        while (!key.empty() && key.back() == 0) key.pop_back();
        return Scalar::term(std::move(key), CycNumber::from_rational(1, cyc_order_));
    }
    CycNumber acc = CycNumber::from_rational(1, cyc_order_);
    for (size_t s = 0; s < e.size(); ++s) {
        if (e[s] != 0) acc = acc * qvals_[s].pow(e[s]);
    }
    return Scalar::from_cyc(acc);
}

Scalar QContext::specialize(const Scalar& s) const {
    Scalar out;
    for (const auto& [e, c] : s.terms()) {
        out += Scalar::from_cyc(c) * q_monomial(e);
    }
    return out;
}

} // namespace qsa
