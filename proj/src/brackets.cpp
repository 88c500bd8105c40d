#include "qsa/brackets.hpp"

#include <sstream>
#include <stdexcept>

#include "qsa/enumerate.hpp"

namespace qsa {

KoszulCochain KoszulCochain::basis(const Ctx& ctx, const Monomial& a, const ExtIndex& b,
                                   const Scalar& c) {
    KoszulCochain k(ctx, b.size());
    k.add_term(a, b, c);
    return k;
}

void KoszulCochain::add_term(const Monomial& a, const ExtIndex& b, const Scalar& c) {
    if (c.is_zero()) return;
    if (b.size() != degree_) throw std::logic_error("KoszulCochain: wedge size mismatch");
    auto key = std::make_pair(a, b);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

KoszulCochain KoszulCochain::operator+(const KoszulCochain& o) const {
    if (degree_ != o.degree_) throw std::logic_error("KoszulCochain: degree mismatch");
    KoszulCochain r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

KoszulCochain KoszulCochain::operator-(const KoszulCochain& o) const {
    return *this + o.scaled(-Scalar::one());
}

KoszulCochain KoszulCochain::scaled(const Scalar& c) const {
    KoszulCochain r(ctx_, degree_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, v * c);
    return r;
}

std::string KoszulCochain::debug_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string(ctx_->generators()) << ")*";
        bool any = false;
        for (size_t i = 0; i < k.first.e.size(); ++i) {
            if (k.first.e[i] == 0) continue;
            if (any) out << "*";
            out << "x" << (i + 1);
            if (k.first.e[i] > 1) out << "^" << k.first.e[i];
            any = true;
        }
        if (!any) out << "1";
        out << "(x)dx(";
        auto idx = k.second.indices();
        for (size_t i = 0; i < idx.size(); ++i) out << (i ? "," : "") << idx[i];
        out << ")";
    }
    if (first) out << "0";
    return out.str();
}

BarCochain circle(const BarCochain& f, const BarCochain& g, int k) {
    if (k < 1 || k > f.degree) throw std::invalid_argument("circle: slot out of range");
    require_same_context(f.ctx, g.ctx);
    BarCochain out;
    out.ctx = f.ctx;
    out.degree = f.degree + g.degree - 1;
    out.origin = BarCochain::Origin::Composite;
    int fdeg = f.degree, gdeg = g.degree;
    auto feval = f.eval, geval = g.eval;
    Ctx ctx = f.ctx;
    out.eval = [ctx, feval, geval, fdeg, gdeg, k](const std::vector<Monomial>& w) {
        if (static_cast<int>(w.size()) != fdeg + gdeg - 1)
            throw std::invalid_argument("circle: word length mismatch");
        std::vector<Monomial> inner_word(w.begin() + (k - 1), w.begin() + (k - 1) + gdeg);
        AlgebraElement inner = geval(inner_word).reduced_mod_constants();
        AlgebraElement out_val(ctx);
        for (const auto& [m, c] : inner.terms()) {
            std::vector<Monomial> outer;
            outer.insert(outer.end(), w.begin(), w.begin() + (k - 1));
            outer.push_back(m);
            outer.insert(outer.end(), w.begin() + (k - 1) + gdeg, w.end());
            out_val = out_val + feval(outer).scaled(c);
        }
        return out_val;
    };
    return out;
}

BarCochain bracket_bar(const BarCochain& f, const BarCochain& g) {
    require_same_context(f.ctx, g.ctx);
    const int p = f.degree, q = g.degree;
    struct Piece {
        bool negate;
        BarCochain term;
    };
    auto pieces = std::make_shared<std::vector<Piece>>();
    for (int k = 1; k <= p; ++k)
        pieces->push_back({((q - 1) * (k - 1)) % 2 != 0, circle(f, g, k)});
    for (int k = 1; k <= q; ++k) {
        int e = 1 + (p - 1) * (q - 1) + (p - 1) * (k - 1);
        pieces->push_back({e % 2 != 0, circle(g, f, k)});
    }
    BarCochain out;
    out.ctx = f.ctx;
    out.degree = p + q - 1;
    out.origin = BarCochain::Origin::Composite;
    Ctx ctx = f.ctx;
    out.eval = [ctx, pieces](const std::vector<Monomial>& w) {
        AlgebraElement acc(ctx);
        for (const auto& piece : *pieces) {
            AlgebraElement v = piece.term.eval(w);
            acc = piece.negate ? acc - v : acc + v;
        }
        return acc;
    };
    return out;
}

bool c_membership(const Ctx& ctx, const std::vector<int>& gamma) {
    const int N = ctx->generators();
    if (static_cast<int>(gamma.size()) != N)
        throw std::invalid_argument("c_membership: wrong length");
    for (int g : gamma)
        if (g < -1) throw std::invalid_argument("c_membership: entries must be >= -1");
    for (int i = 1; i <= N; ++i) {
        if (gamma[i - 1] == -1) continue;
        QExp e(ctx->slots(), 0);
        for (int s = 1; s <= N; ++s) {
            if (s == i || gamma[s - 1] == 0) continue;
            if (i < s)
                e[qexp_slot(N, i, s)] += gamma[s - 1];
            else
                e[qexp_slot(N, s, i)] -= gamma[s - 1];
        }
        if (!ctx->q_monomial(e).is_one()) return false;
    }
    return true;
}

std::vector<KoszulCochain> hh_basis(const Ctx& ctx, int m, int cap) {
    const int N = ctx->generators();
    std::vector<KoszulCochain> out;
    for (const auto& b : wedges_of_size(N, m)) {
        for (const auto& a : monomials_up_to(N, cap)) {
            std::vector<int> gamma(N);
            for (int i = 0; i < N; ++i) gamma[i] = a.e[i] - (b.contains(i + 1) ? 1 : 0);
            if (c_membership(ctx, gamma)) out.push_back(KoszulCochain::basis(ctx, a, b));
        }
    }
    return out;
}

BarCochain from_koszul(const KoszulCochain& alpha) {
    BarCochain f;
    f.ctx = alpha.context();
    f.degree = alpha.degree();
    f.origin = BarCochain::Origin::FromKoszul;
    auto terms = std::make_shared<std::map<std::pair<Monomial, ExtIndex>, Scalar>>(alpha.terms());
    Ctx ctx = alpha.context();
    int deg = alpha.degree();
    f.eval = [ctx, terms, deg](const std::vector<Monomial>& w) {
        if (static_cast<int>(w.size()) != deg)
            throw std::invalid_argument("bar cochain: word length mismatch");
        AlgebraElement out(ctx);
        KoszulElem K = psi(ctx, w);
        for (const auto& [k, c] : K.terms()) {
            for (const auto& [ab, ca] : *terms) {
                if (!(ab.second == k.wedge)) continue;
                auto [c1, ua] = multiply_monomials(ctx, k.left, ab.first);
                auto [c2, uav] = multiply_monomials(ctx, ua, k.right);
                out.add_term(uav, c * ca * c1 * c2);
            }
        }
        return out;
    };
    return f;
}

KoszulCochain to_koszul(const BarCochain& f, int r) {
    const Ctx& ctx = f.ctx;
    KoszulCochain out(ctx, r);
    for (const auto& I : wedges_of_size(ctx->generators(), r)) {
        BarElem embed = phi(ctx, I);
        AlgebraElement val(ctx);
        for (const auto& [k, c] : embed.terms()) val = val + f.eval(k.word).scaled(c);
        for (const auto& [m, c] : val.terms()) out.add_term(m, I, c);
    }
    return out;
}

KoszulCochain bracket_pipeline(const KoszulCochain& alpha, const KoszulCochain& beta) {
    require_same_context(alpha.context(), beta.context());
    BarCochain f = from_koszul(alpha), g = from_koszul(beta);
    return to_koszul(bracket_bar(f, g), alpha.degree() + beta.degree() - 1);
}

namespace {

struct BasisTerm {
    Monomial a;
    std::vector<int> J;
    Scalar coeff;
};

BasisTerm basis_term_of(const KoszulCochain& alpha, const char* who) {
    if (alpha.terms().size() != 1)
        throw std::invalid_argument(std::string(who) + ": input not of basis form");
    const auto& [key, c] = *alpha.terms().begin();
    return {key.first, key.second.indices(), c};
}

} // namespace

KoszulCochain bracket_closed(const KoszulCochain& alpha, const KoszulCochain& beta) {
    require_same_context(alpha.context(), beta.context());
    const Ctx& ctx = alpha.context();
    BasisTerm A = basis_term_of(alpha, "bracket_closed");
    BasisTerm B = basis_term_of(beta, "bracket_closed");
    const int p = static_cast<int>(A.J.size());
    const int q = static_cast<int>(B.J.size());
    KoszulCochain out(ctx, p + q - 1);
    Scalar scale = A.coeff * B.coeff;

    auto half = [&](const BasisTerm& outer, const BasisTerm& inner, bool mirrored) {
        const auto& J = outer.J;
        const auto& L = inner.J;
        const int dp = static_cast<int>(J.size());
        for (int k = 1; k <= dp; ++k) {
            if (inner.a.e[J[k - 1] - 1] == 0) continue; // difference quotient vanishes
            std::vector<int> interleaved;
            interleaved.insert(interleaved.end(), J.begin(), J.begin() + (k - 1));
            interleaved.insert(interleaved.end(), L.begin(), L.end());
            interleaved.insert(interleaved.end(), J.begin() + k, J.end());
            ExtResult ext = ext_reorder(ctx, interleaved);
            if (ext.zero) continue;

            std::vector<Monomial> outer_tuple;
            for (int s = 0; s < dp; ++s)
                outer_tuple.push_back(s == k - 1 ? inner.a
                                                 : Monomial::gen(ctx->generators(), J[s]));
            Scalar mu_outer = mu_factorization(ctx, outer_tuple, J);
            std::vector<Monomial> inner_tuple;
            for (int l : L) inner_tuple.push_back(Monomial::gen(ctx->generators(), l));
            Scalar mu_inner = mu_factorization(ctx, inner_tuple, L);
            Scalar rho = ext.coeff * mu_outer * mu_inner;

            AlgebraElement val = dq(ctx, J[k - 1], inner.a).apply_to(outer.a);

            int sign_exp = mirrored
                               ? (p - 1) * (q - 1) + (p - 1) * (k - 1) + 1
                               : (q - 1) * (k - 1);
            Scalar sgn = (sign_exp % 2 == 0) ? Scalar::one() : -Scalar::one();
            for (const auto& [m, c] : val.terms())
                out.add_term(m, ext.index, scale * sgn * rho * c);
        }
    };
    half(A, B, false);
    half(B, A, true);
    return out;
}

KoszulCochain schouten_classical(const KoszulCochain& alpha, const KoszulCochain& beta) {
    require_same_context(alpha.context(), beta.context());
    const Ctx& ctx = alpha.context();
    if (!ctx->is_classical())
        throw std::invalid_argument("schouten_classical: context must have all q_{ij} = 1");
    const int N = ctx->generators();
    const int p = alpha.degree(), q = beta.degree();
    KoszulCochain out(ctx, p + q - 1);

    auto half = [&](const KoszulCochain& F, const KoszulCochain& G, bool mirrored) {
        for (const auto& [fk, fc] : F.terms()) {
            for (const auto& [gk, gc] : G.terms()) {
                auto J = fk.second.indices();
                auto L = gk.second.indices();
                const int dp = static_cast<int>(J.size());
                for (int k = 1; k <= dp; ++k) {
                    int jk = J[k - 1];
                    if (gk.first.e[jk - 1] == 0) continue;
                    std::vector<int> interleaved;
                    interleaved.insert(interleaved.end(), J.begin(), J.begin() + (k - 1));
                    interleaved.insert(interleaved.end(), L.begin(), L.end());
                    interleaved.insert(interleaved.end(), J.begin() + k, J.end());
                    // plain permutation sign; repeats vanish
                    uint32_t seen = 0;
                    bool repeat = false;
                    int inv = 0;
                    for (size_t x = 0; x < interleaved.size(); ++x) {
                        uint32_t bit = 1u << (interleaved[x] - 1);
                        if (seen & bit) repeat = true;
                        seen |= bit;
                        for (size_t y = x + 1; y < interleaved.size(); ++y)
                            if (interleaved[x] > interleaved[y]) ++inv;
                    }
                    if (repeat) continue;
                    // partial derivative d(x^b)/dx_{jk} times x^a
                    Monomial v = gk.first;
                    Rational mult = v.e[jk - 1];
                    v.e[jk - 1] -= 1;
                    Monomial prod = fk.first;
                    for (int t = 0; t < N; ++t) prod.e[t] += v.e[t];
                    int sign_exp = (mirrored ? (p - 1) * (q - 1) + (p - 1) * (k - 1) + 1
                                             : (q - 1) * (k - 1)) +
                                   inv;
                    Rational r = mult * (sign_exp % 2 == 0 ? 1 : -1);
                    out.add_term(prod, ExtIndex{seen}, fc * gc * Scalar::from_rational(r));
                }
            }
        }
    };
    half(alpha, beta, false);
    half(beta, alpha, true);
    return out;
}

KoszulCochain specialize(const Ctx& target, const KoszulCochain& alpha) {
    KoszulCochain out(target, alpha.degree());
    for (const auto& [k, c] : alpha.terms()) out.add_term(k.first, k.second, target->specialize(c));
    return out;
}

} // namespace qsa
