#include "qsa/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsa {

Monomial Monomial::gen(int N, int i) {
    if (i < 1 || i > N) throw std::invalid_argument("Monomial::gen: index out of range");
    Monomial m = unit(N);
    m.e[i - 1] = 1;
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

Monomial Monomial::plus(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

Word word_of(const Monomial& m) {
    Word w;
    w.reserve(m.degree());
    for (size_t i = 0; i < m.e.size(); ++i)
        for (int k = 0; k < m.e[i]; ++k) w.push_back(static_cast<int>(i) + 1);
    return w;
}

Monomial monomial_of_word(int N, const Word& w) {
    Monomial m = Monomial::unit(N);
    for (int g : w) {
        if (g < 1 || g > N) throw std::invalid_argument("word: generator index out of range");
        ++m.e[g - 1];
    }
    return m;
}

QExp inversion_exponents(int N, const Word& w) {
    QExp e(N * (N - 1) / 2, 0);
    for (size_t a = 0; a < w.size(); ++a)
        for (size_t b = a + 1; b < w.size(); ++b)
            if (w[a] > w[b]) e[qexp_slot(N, w[b], w[a])] -= 1;
    return e;
}

std::pair<Scalar, Monomial> twist_reorder(const Ctx& ctx, const Word& w) {
    QExp e = inversion_exponents(ctx->generators(), w);
    return {ctx->q_monomial(e), monomial_of_word(ctx->generators(), w)};
}

Scalar twist_between(const Ctx& ctx, const Word& from, const Word& to) {
    QExp ef = inversion_exponents(ctx->generators(), from);
    QExp et = inversion_exponents(ctx->generators(), to);
    for (size_t i = 0; i < ef.size(); ++i) ef[i] -= et[i];
    return ctx->q_monomial(ef);
}

AlgebraElement AlgebraElement::monomial(const Ctx& ctx, const Monomial& m, const Scalar& c) {
    AlgebraElement a(ctx);
    a.add_term(m, c);
    return a;
}

AlgebraElement AlgebraElement::one(const Ctx& ctx) {
    return monomial(ctx, Monomial::unit(ctx->generators()));
}

void AlgebraElement::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    require_same_context(ctx_, o.ctx_);
    AlgebraElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    return *this + o.scaled(-Scalar::one());
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    AlgebraElement r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

AlgebraElement AlgebraElement::reduced_mod_constants() const {
    AlgebraElement r(ctx_);
    for (const auto& [m, c] : terms_)
        if (!m.is_constant()) r.add_term(m, c);
    return r;
}

std::pair<Scalar, Monomial> multiply_monomials(const Ctx& ctx, const Monomial& a,
                                               const Monomial& b) {
    // Only cross inversions between the two halves contribute.
    const int N = ctx->generators();
    QExp e(ctx->slots(), 0);
    for (int i = 2; i <= N; ++i) {
        if (a.e[i - 1] == 0) continue;
        for (int j = 1; j < i; ++j) {
            if (b.e[j - 1] == 0) continue;
            e[qexp_slot(N, j, i)] -= a.e[i - 1] * b.e[j - 1];
        }
    }
    return {ctx->q_monomial(e), a.plus(b)};
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_context(a.context(), b.context());
    AlgebraElement r(a.context());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            auto [c, m] = multiply_monomials(a.context(), ma, mb);
            r.add_term(m, ca * cb * c);
        }
    }
    return r;
}

int ExtIndex::size() const { return __builtin_popcount(mask); }

std::vector<int> ExtIndex::indices() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if ((mask >> i) & 1u) out.push_back(i + 1);
    return out;
}

ExtIndex ExtIndex::of(const std::vector<int>& increasing) {
    ExtIndex idx;
    int prev = 0;
    for (int i : increasing) {
        if (i <= prev) throw std::invalid_argument("ExtIndex: indices must strictly increase");
        idx.mask |= 1u << (i - 1);
        prev = i;
    }
    return idx;
}

ExtResult ext_reorder(const Ctx& ctx, const std::vector<int>& indices) {
    const int N = ctx->generators();
    uint32_t seen = 0;
    for (int i : indices) {
        if (i < 1 || i > N) throw std::invalid_argument("ext_reorder: index out of range");
        uint32_t bit = 1u << (i - 1);
        if (seen & bit) return {};
        seen |= bit;
    }
    int inversions = 0;
    QExp e(ctx->slots(), 0);
    for (size_t a = 0; a < indices.size(); ++a) {
        for (size_t b = a + 1; b < indices.size(); ++b) {
            if (indices[a] > indices[b]) {
                ++inversions;
                // dx_a dx_b = -q_{ab}^{-1} dx_b dx_a for a > b
                e[qexp_slot(N, indices[b], indices[a])] += 1;
            }
        }
    }
    Scalar coeff = ctx->q_monomial(e);
    if (inversions % 2) coeff = -coeff;
    return {false, coeff, ExtIndex{seen}};
}

Scalar q_pi(const Ctx& ctx, const std::vector<int>& I, const std::vector<int>& pi) {
    if (I.size() != pi.size()) throw std::invalid_argument("q_pi: size mismatch");
    Word permuted(I.size());
    for (size_t k = 0; k < pi.size(); ++k) permuted[k] = I[pi[k]];
    Word sorted = I;
    std::sort(sorted.begin(), sorted.end());
    return twist_between(ctx, sorted, permuted);
}

} // namespace qsa
