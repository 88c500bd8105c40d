#include "qsa/complexes.hpp"

#include <sstream>
#include <stdexcept>

namespace qsa {

namespace {

std::string mono_str(const Monomial& m) {
    std::ostringstream out;
    bool any = false;
    for (size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (any) out << "*";
        out << "x" << (i + 1);
        if (m.e[i] > 1) out << "^" << m.e[i];
        any = true;
    }
    if (!any) out << "1";
    return out.str();
}

} // namespace

KoszulElem KoszulElem::basis(const Ctx& ctx, const ExtIndex& wedge, const Monomial& right) {
    KoszulElem x(ctx, wedge.size());
    x.add_term(Monomial::unit(ctx->generators()), wedge, right, Scalar::one());
    return x;
}

KoszulElem KoszulElem::from_algebra(const AlgebraElement& a) {
    KoszulElem x(a.context(), -1);
    Monomial unit = Monomial::unit(a.context()->generators());
    for (const auto& [m, c] : a.terms()) x.add_term(m, ExtIndex{}, unit, c);
    return x;
}

AlgebraElement KoszulElem::to_algebra() const {
    if (degree_ != -1) throw std::logic_error("KoszulElem: not a degree -1 element");
    AlgebraElement a(ctx_);
    for (const auto& [k, c] : terms_) a.add_term(k.left, c);
    return a;
}

void KoszulElem::add_term(const Monomial& l, const ExtIndex& w, const Monomial& r,
                          const Scalar& c) {
    if (c.is_zero()) return;
    if (degree_ >= 0 && w.size() != degree_)
        throw std::logic_error("KoszulElem: wedge length does not match degree");
    Key key{l, w, r};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

KoszulElem KoszulElem::operator+(const KoszulElem& o) const {
    if (degree_ != o.degree_) throw std::logic_error("KoszulElem: degree mismatch in sum");
    KoszulElem r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.left, k.wedge, k.right, c);
    return r;
}

KoszulElem KoszulElem::operator-(const KoszulElem& o) const {
    return *this + o.scaled(-Scalar::one());
}

KoszulElem KoszulElem::scaled(const Scalar& c) const {
    KoszulElem r(ctx_, degree_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.add_term(k.left, k.wedge, k.right, v * c);
    return r;
}

KoszulElem KoszulElem::left_mul(const Monomial& m) const {
    KoszulElem r(ctx_, degree_);
    for (const auto& [k, v] : terms_) {
        auto [c, lm] = multiply_monomials(ctx_, m, k.left);
        r.add_term(lm, k.wedge, k.right, v * c);
    }
    return r;
}

KoszulElem KoszulElem::right_mul(const Monomial& m) const {
    KoszulElem r(ctx_, degree_);
    for (const auto& [k, v] : terms_) {
        auto [c, rm] = multiply_monomials(ctx_, k.right, m);
        r.add_term(k.left, k.wedge, rm, v * c);
    }
    return r;
}

std::string KoszulElem::debug_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string(ctx_->generators()) << ")*" << mono_str(k.left) << "(x)";
        auto idx = k.wedge.indices();
        if (idx.empty()) {
            out << "1";
        } else {
            for (size_t i = 0; i < idx.size(); ++i) out << (i ? "^" : "") << "dx" << idx[i];
        }
        out << "(x)" << mono_str(k.right);
    }
    if (first) out << "0";
    return out.str();
}

BarElem BarElem::basis(const Ctx& ctx, const std::vector<Monomial>& word,
                       const Monomial& right) {
    BarElem x(ctx, static_cast<int>(word.size()));
    x.add_term(Monomial::unit(ctx->generators()), word, right, Scalar::one());
    return x;
}

BarElem BarElem::from_algebra(const AlgebraElement& a) {
    BarElem x(a.context(), -1);
    Monomial unit = Monomial::unit(a.context()->generators());
    for (const auto& [m, c] : a.terms()) x.add_term(m, {}, unit, c);
    return x;
}

AlgebraElement BarElem::to_algebra() const {
    if (degree_ != -1) throw std::logic_error("BarElem: not a degree -1 element");
    AlgebraElement a(ctx_);
    for (const auto& [k, c] : terms_) a.add_term(k.left, c);
    return a;
}

void BarElem::add_term(const Monomial& l, const std::vector<Monomial>& w, const Monomial& r,
                       const Scalar& c) {
    if (c.is_zero()) return;
    if (degree_ >= 0 && static_cast<int>(w.size()) != degree_)
        throw std::logic_error("BarElem: word length does not match degree");
    for (const auto& entry : w)
        if (entry.is_constant()) return; // vanishes in the normalized complex
    Key key{l, w, r};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BarElem BarElem::operator+(const BarElem& o) const {
    if (degree_ != o.degree_) throw std::logic_error("BarElem: degree mismatch in sum");
    BarElem r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.left, k.word, k.right, c);
    return r;
}

BarElem BarElem::operator-(const BarElem& o) const { return *this + o.scaled(-Scalar::one()); }

BarElem BarElem::scaled(const Scalar& c) const {
    BarElem r(ctx_, degree_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.add_term(k.left, k.word, k.right, v * c);
    return r;
}

BarElem BarElem::left_mul(const Monomial& m) const {
    BarElem r(ctx_, degree_);
    for (const auto& [k, v] : terms_) {
        auto [c, lm] = multiply_monomials(ctx_, m, k.left);
        r.add_term(lm, k.word, k.right, v * c);
    }
    return r;
}

BarElem BarElem::right_mul(const Monomial& m) const {
    BarElem r(ctx_, degree_);
    for (const auto& [k, v] : terms_) {
        auto [c, rm] = multiply_monomials(ctx_, k.right, m);
        r.add_term(k.left, k.word, rm, v * c);
    }
    return r;
}

std::string BarElem::debug_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string(ctx_->generators()) << ")*" << mono_str(k.left);
        for (const auto& w : k.word) out << "(x)" << mono_str(w);
        out << "(x)" << mono_str(k.right);
    }
    if (first) out << "0";
    return out.str();
}

KoszulElem koszul_d(const KoszulElem& x) {
    const Ctx& ctx = x.context();
    if (x.degree() < 0) throw std::logic_error("koszul_d: negative degree");
    if (x.degree() == 0) {
        AlgebraElement prod(ctx);
        for (const auto& [k, c] : x.terms()) {
            auto [cm, m] = multiply_monomials(ctx, k.left, k.right);
            prod.add_term(m, c * cm);
        }
        return KoszulElem::from_algebra(prod);
    }
    KoszulElem out(ctx, x.degree() - 1);
    for (const auto& [k, c] : x.terms()) {
        const auto J = k.wedge.indices();
        const int p = static_cast<int>(J.size());
        for (int i = 0; i < p; ++i) {
            std::vector<int> rest;
            for (int s = 0; s < p; ++s)
                if (s != i) rest.push_back(J[s]);
            Scalar sign = (i % 2 == 0) ? Scalar::one() : -Scalar::one();

            // x_{j_i} passes to the left over the earlier wedge factors
            Word to_left = {J[i]};
            to_left.insert(to_left.end(), rest.begin(), rest.end());
            Scalar cl = twist_between(ctx, J, to_left);
            auto [cl2, lmono] = multiply_monomials(ctx, k.left, Monomial::gen(ctx->generators(), J[i]));
            out.add_term(lmono, ExtIndex::of(rest), k.right, c * sign * cl * cl2);

            // ... or to the right over the later ones
            Word to_right = rest;
            to_right.push_back(J[i]);
            Scalar cr = twist_between(ctx, J, to_right);
            auto [cr2, rmono] = multiply_monomials(ctx, Monomial::gen(ctx->generators(), J[i]), k.right);
            out.add_term(k.left, ExtIndex::of(rest), rmono, -(c * sign * cr * cr2));
        }
    }
    return out;
}

KoszulElem koszul_t(const KoszulElem& x) {
    const Ctx& ctx = x.context();
    const int N = ctx->generators();
    if (x.degree() == -1) {
        // t_{-1}: a |-> a (x) 1, left-A-linear from t_{-1}(1) = 1 (x) 1
        KoszulElem out(ctx, 0);
        Monomial unit = Monomial::unit(N);
        for (const auto& [k, c] : x.terms()) out.add_term(k.left, ExtIndex{}, unit, c);
        return out;
    }
    const int p = x.degree();
    KoszulElem out(ctx, p + 1);
    Scalar sign = (p % 2 == 0) ? -Scalar::one() : Scalar::one(); // (-1)^{p+1}
    for (const auto& [k, c] : x.terms()) {
        const auto J = k.wedge.indices();
        const Monomial& l = k.right;
        int lo = J.empty() ? 1 : J.back() + 1;
        Word orig = J;
        for (int g : word_of(l)) orig.push_back(g);
        for (int jnext = lo; jnext <= N; ++jnext) {
            for (int r = 1; r <= l.e[jnext - 1]; ++r) {
                Monomial lm = Monomial::unit(N), rm = Monomial::unit(N);
                lm.e[jnext - 1] = l.e[jnext - 1] - r;
                for (int t = jnext + 1; t <= N; ++t) lm.e[t - 1] = l.e[t - 1];
                for (int t = 1; t < jnext; ++t) rm.e[t - 1] = l.e[t - 1];
                rm.e[jnext - 1] = r - 1;

                Word now = word_of(lm);
                now.insert(now.end(), J.begin(), J.end());
                now.push_back(jnext);
                for (int g : word_of(rm)) now.push_back(g);
                Scalar lambda = twist_between(ctx, orig, now);

                std::vector<int> wedge = J;
                wedge.push_back(jnext);
                auto [lc, full_left] = multiply_monomials(ctx, k.left, lm);
                out.add_term(full_left, ExtIndex::of(wedge), rm, c * sign * lambda * lc);
            }
        }
    }
    return out;
}

BarElem bar_delta(const BarElem& x) {
    const Ctx& ctx = x.context();
    if (x.degree() < 0) throw std::logic_error("bar_delta: negative degree");
    if (x.degree() == 0) {
        AlgebraElement prod(ctx);
        for (const auto& [k, c] : x.terms()) {
            auto [cm, m] = multiply_monomials(ctx, k.left, k.right);
            prod.add_term(m, c * cm);
        }
        return BarElem::from_algebra(prod);
    }
    const int p = x.degree();
    BarElem out(ctx, p - 1);
    for (const auto& [k, c] : x.terms()) {
        for (int i = 0; i <= p; ++i) {
            Scalar sc = (i % 2 == 0) ? c : -(c);
            if (i == 0) {
                auto [cm, m] = multiply_monomials(ctx, k.left, k.word[0]);
                std::vector<Monomial> w(k.word.begin() + 1, k.word.end());
                out.add_term(m, w, k.right, sc * cm);
            } else if (i == p) {
                auto [cm, m] = multiply_monomials(ctx, k.word[p - 1], k.right);
                std::vector<Monomial> w(k.word.begin(), k.word.end() - 1);
                out.add_term(k.left, w, m, sc * cm);
            } else {
                auto [cm, m] = multiply_monomials(ctx, k.word[i - 1], k.word[i]);
                std::vector<Monomial> w;
                w.insert(w.end(), k.word.begin(), k.word.begin() + (i - 1));
                w.push_back(m);
                w.insert(w.end(), k.word.begin() + (i + 1), k.word.end());
                out.add_term(k.left, w, k.right, sc * cm);
            }
        }
    }
    return out;
}

BarElem bar_s(const BarElem& x) {
    const Ctx& ctx = x.context();
    const int N = ctx->generators();
    if (x.degree() == -1) {
        BarElem out(ctx, 0);
        Monomial unit = Monomial::unit(N);
        for (const auto& [k, c] : x.terms()) out.add_term(k.left, {}, unit, c);
        return out;
    }
    const int p = x.degree();
    BarElem out(ctx, p + 1);
    Scalar sign = (p % 2 == 0) ? -Scalar::one() : Scalar::one(); // (-1)^{p+1}
    Monomial unit = Monomial::unit(N);
    for (const auto& [k, c] : x.terms()) {
        if (k.right.is_constant()) continue; // s vanishes when the last factor is 1
        std::vector<Monomial> w = k.word;
        w.push_back(k.right);
        out.add_term(k.left, w, unit, c * sign);
    }
    return out;
}

HomotopyReport verify_homotopy_koszul(const std::vector<KoszulElem>& elems) {
    for (const auto& x : elems) {
        KoszulElem lhs = koszul_t(koszul_d(x)) + koszul_d(koszul_t(x));
        if (!(lhs == x)) {
            return {false, "t d + d t != id on " + x.debug_string() + "; got " +
                               lhs.debug_string()};
        }
    }
    return {};
}

HomotopyReport verify_homotopy_bar(const std::vector<BarElem>& elems) {
    for (const auto& x : elems) {
        BarElem lhs = bar_s(bar_delta(x)) + bar_delta(bar_s(x));
        if (!(lhs == x)) {
            return {false, "s d + d s != id on " + x.debug_string() + "; got " +
                               lhs.debug_string()};
        }
    }
    return {};
}

} // namespace qsa
