#include "qsa/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace qsa {

int qexp_slot(int N, int i, int j) {
    // row-major over pairs (i,j), i<j, 1-based
    if (!(1 <= i && i < j && j <= N)) throw std::logic_error("qexp_slot: need 1 <= i < j <= N");
    int slot = 0;
    for (int a = 1; a < i; ++a) slot += N - a;
    return slot + (j - i - 1);
}

namespace {
void trim_key(QExp& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}
} // namespace

Scalar Scalar::from_cyc(const CycNumber& c) {
    Scalar s;
    if (!c.is_zero()) s.terms_.emplace(QExp{}, c);
    return s;
}

Scalar Scalar::term(QExp e, const CycNumber& c) {
    Scalar s;
    trim_key(e);
    if (!c.is_zero()) s.terms_.emplace(std::move(e), c);
    return s;
}

bool Scalar::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second.is_one();
}

bool Scalar::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

CycNumber Scalar::constant_value() const {
    if (terms_.empty()) return CycNumber();
    if (!is_constant()) throw std::logic_error("Scalar: not constant in the q parameters");
    return terms_.begin()->second;
}

void Scalar::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r = *this;
    r += o;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end())
            terms_.emplace(e, c);
        else
            it->second = it->second + c;
    }
    prune();
    return *this;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            QExp e = e1;
            if (e.size() < e2.size()) e.resize(e2.size(), 0);
            for (size_t k = 0; k < e2.size(); ++k) e[k] += e2[k];
            trim_key(e);
            CycNumber c = c1 * c2;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end())
                r.terms_.emplace(std::move(e), c);
            else
                it->second = it->second + c;
        }
    }
    r.prune();
    return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
}

Scalar Scalar::inverse_unit() const {
    if (terms_.size() != 1) throw std::domain_error("Scalar: inverse of a non-monomial scalar");
    QExp e = terms_.begin()->first;
    for (auto& x : e) x = -x;
    return term(std::move(e), terms_.begin()->second.inverse());
}

std::vector<std::pair<bool, std::string>> Scalar::atomic_pieces(int N) const {
    std::vector<std::pair<bool, std::string>> out;
    for (const auto& [e, c] : terms_) {
        std::ostringstream qs;
        int slot = 0;
        for (int i = 1; i <= N; ++i) {
            for (int j = i + 1; j <= N; ++j, ++slot) {
                if (slot >= static_cast<int>(e.size()) || e[slot] == 0) continue;
                qs << "*q" << i << j;
                if (e[slot] != 1) qs << "^" << e[slot];
            }
        }
        std::string qpart = qs.str();
        const auto& coeffs = c.coefficients();
        for (size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k] == 0) continue;
            bool neg = coeffs[k] < 0;
            Rational r = neg ? Rational(-coeffs[k]) : coeffs[k];
            std::ostringstream body;
            bool unit = (r == 1) && (k > 0 || !qpart.empty());
            if (!unit) {
                body << numerator(r);
                if (denominator(r) != 1) body << "/" << denominator(r);
            }
            if (k > 0) {
                if (!unit) body << "*";
                body << "zeta";
                if (k > 1) body << "^" << k;
            }
            std::string head = body.str();
            std::string full =
                head.empty() ? (qpart.empty() ? "1" : qpart.substr(1)) : head + qpart;
            out.emplace_back(neg, full);
        }
    }
    return out;
}

std::string Scalar::to_string(int N) const {
    auto pieces = atomic_pieces(N);
    if (pieces.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [neg, body] : pieces) {
        if (first)
            out << (neg ? "-" : "") << body;
        else
            out << (neg ? "-" : "+") << body;
        first = false;
    }
    return out.str();
}

} // namespace qsa
