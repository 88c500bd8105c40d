#include "qsa/group_extension.hpp"

#include <sstream>
#include <stdexcept>

#include "qsa/enumerate.hpp"

namespace qsa {

SkewKoszulCochain SkewKoszulCochain::basis(const GCtx& grp, const Monomial& a,
                                           const GroupElement& g, const ExtIndex& b,
                                           const Scalar& c) {
    SkewKoszulCochain k(grp, b.size());
    k.add_term(a, grp->reduce(g), b, c);
    return k;
}

void SkewKoszulCochain::add_term(const Monomial& a, const GroupElement& g, const ExtIndex& b,
                                 const Scalar& c) {
    if (c.is_zero()) return;
    if (b.size() != degree_) throw std::logic_error("SkewKoszulCochain: wedge size mismatch");
    auto key = std::make_tuple(a, g, b);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SkewKoszulCochain SkewKoszulCochain::operator+(const SkewKoszulCochain& o) const {
    if (degree_ != o.degree_) throw std::logic_error("SkewKoszulCochain: degree mismatch");
    SkewKoszulCochain r = *this;
    for (const auto& [k, c] : o.terms_)
        r.add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), c);
    return r;
}

SkewKoszulCochain SkewKoszulCochain::operator-(const SkewKoszulCochain& o) const {
    return *this + o.scaled(-Scalar::one());
}

SkewKoszulCochain SkewKoszulCochain::scaled(const Scalar& c) const {
    SkewKoszulCochain r(grp_, degree_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_)
        r.add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), v * c);
    return r;
}

std::string SkewKoszulCochain::debug_string() const {
    const Ctx& ctx = grp_->context();
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string(ctx->generators()) << ")*";
        const auto& m = std::get<0>(k);
        bool any = false;
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (any) out << "*";
            out << "x" << (i + 1);
            if (m.e[i] > 1) out << "^" << m.e[i];
            any = true;
        }
        if (!any) out << "1";
        out << "#g(";
        const auto& g = std::get<1>(k);
        for (size_t i = 0; i < g.v.size(); ++i) out << (i ? "," : "") << g.v[i];
        out << ")(x)dx(";
        auto idx = std::get<2>(k).indices();
        for (size_t i = 0; i < idx.size(); ++i) out << (i ? "," : "") << idx[i];
        out << ")";
    }
    if (first) out << "0";
    return out.str();
}

SkewKoszulCochain skew_diff(const SkewKoszulCochain& x) {
    const GCtx& grp = x.group();
    if (!grp->diagonal()) throw std::invalid_argument("skew_diff: diagonal actions only");
    const Ctx& ctx = grp->context();
    const int N = ctx->generators();
    SkewKoszulCochain out(grp, x.degree() + 1);
    for (const auto& [k, c] : x.terms()) {
        const auto& [l, g, I] = k;
        const auto idx = I.indices();
        for (int i = 1; i <= N; ++i) {
            if (I.contains(i)) continue;
            int before = 0;
            QExp elo(ctx->slots(), 0), ehi(ctx->slots(), 0);
            for (int s : idx) {
                if (s < i) {
                    ++before;
                    elo[qexp_slot(N, s, i)] += 1; // q_{s,i}
                } else {
                    ehi[qexp_slot(N, i, s)] += 1; // q_{i,s}
                }
            }
            Scalar sign = (before % 2 == 0) ? Scalar::one() : -Scalar::one();
            ExtIndex grown{I.mask | (1u << (i - 1))};
            Monomial xi = Monomial::gen(N, i);

            auto [ca, ma] = multiply_monomials(ctx, xi, l);
            out.add_term(ma, g, grown, c * sign * ctx->q_monomial(elo) * ca);

            auto [cb, mb] = multiply_monomials(ctx, l, xi);
            Scalar chi = ctx->cyc(grp->chi(i, g));
            out.add_term(mb, g, grown, -(c * sign * ctx->q_monomial(ehi) * chi * cb));
        }
    }
    return out;
}

SkewKoszulCochain cochain_group_action(const GroupElement& h, const SkewKoszulCochain& x) {
    const GCtx& grp = x.group();
    SkewKoszulCochain out(grp, x.degree());
    for (const auto& [k, c] : x.terms()) {
        const auto& [a, g, I] = k;
        auto [ca, ah] = grp->act_monomial(h, a);
        ExtResult ext = grp->act_ext(h, I);
        if (ext.zero) continue;
        // conjugation h g h^{-1} is trivial: the group is abelian
        out.add_term(ah, g, ext.index, c * ca * ext.coeff);
    }
    return out;
}

bool cg_membership(const GCtx& grp, const std::vector<int>& gamma, const GroupElement& g) {
    if (!grp->diagonal()) throw std::invalid_argument("cg_membership: diagonal actions only");
    const Ctx& ctx = grp->context();
    const int N = ctx->generators();
    if (static_cast<int>(gamma.size()) != N)
        throw std::invalid_argument("cg_membership: wrong length");
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
        if (!(ctx->q_monomial(e) == ctx->cyc(grp->chi(i, g)))) return false;
    }
    return true;
}

std::vector<SkewKoszulCochain> hh_skew_basis(const GCtx& grp, int m, int cap) {
    const Ctx& ctx = grp->context();
    const int N = ctx->generators();
    std::vector<SkewKoszulCochain> out;
    for (const auto& g : grp->elements()) {
        for (const auto& b : wedges_of_size(N, m)) {
            for (const auto& a : monomials_up_to(N, cap)) {
                std::vector<int> gamma(N);
                for (int i = 0; i < N; ++i) gamma[i] = a.e[i] - (b.contains(i + 1) ? 1 : 0);
                if (cg_membership(grp, gamma, g))
                    out.push_back(SkewKoszulCochain::basis(grp, a, g, b));
            }
        }
    }
    return out;
}

SkewKoszulCochain reynolds(const SkewKoszulCochain& x) {
    const GCtx& grp = x.group();
    SkewKoszulCochain acc(grp, x.degree());
    for (const auto& h : grp->elements()) acc = acc + cochain_group_action(h, x);
    return acc.scaled(Scalar::from_rational(Rational(1, grp->group_order())));
}

bool is_invariant(const SkewKoszulCochain& x) {
    const GCtx& grp = x.group();
    for (size_t j = 0; j < grp->orders().size(); ++j) {
        GroupElement gen = grp->identity();
        gen.v[j] = 1;
        if (!(cochain_group_action(gen, x) == x)) return false;
    }
    return true;
}

SkewBarCochain theta(const SkewKoszulCochain& alpha) {
    if (!is_invariant(alpha))
        throw std::invalid_argument("theta: input cochain is not G-invariant; apply reynolds");
    const GCtx& grp = alpha.group();
    const Ctx& ctx = grp->context();
    auto terms =
        std::make_shared<std::map<std::tuple<Monomial, GroupElement, ExtIndex>, Scalar>>(
            alpha.terms());
    int deg = alpha.degree();
    SkewBarCochain f;
    f.grp = grp;
    f.degree = deg;
    f.eval = [grp, ctx, terms, deg](const std::vector<std::pair<Monomial, GroupElement>>& pairs) {
        if (static_cast<int>(pairs.size()) != deg)
            throw std::invalid_argument("skew bar cochain: word length mismatch");
        SkewElement out(grp);
        // unwind the group slots through the resolution identification
        Scalar coeff = Scalar::one();
        std::vector<Monomial> word;
        GroupElement acc = grp->identity();
        for (const auto& [m, g] : pairs) {
            if (m.is_constant()) return out; // zero in the normalized complex
            auto [c, mm] = grp->act_monomial(acc, m);
            coeff *= c;
            word.push_back(mm);
            acc = grp->compose(acc, g);
        }
        KoszulElem K = psi(ctx, word);
        for (const auto& [k, c] : K.terms()) {
            for (const auto& [ab, ca] : *terms) {
                if (!(std::get<2>(ab) == k.wedge)) continue;
                const GroupElement& h = std::get<1>(ab);
                auto [c1, ua] = multiply_monomials(ctx, k.left, std::get<0>(ab));
                auto [cv, vh] = grp->act_monomial(h, k.right);
                auto [c2, uav] = multiply_monomials(ctx, ua, vh);
                out.add_term(uav, grp->compose(h, acc), coeff * c * ca * c1 * cv * c2);
            }
        }
        return out;
    };
    return f;
}

SkewKoszulCochain gamma(const SkewBarCochain& f, int p) {
    const GCtx& grp = f.grp;
    const Ctx& ctx = grp->context();
    const int N = ctx->generators();
    SkewKoszulCochain out(grp, p);
    GroupElement e = grp->identity();
    for (const auto& I : wedges_of_size(N, p)) {
        const auto idx = I.indices();
        std::vector<int> perm(p);
        for (int i = 0; i < p; ++i) perm[i] = i;
        do {
            int inv = 0;
            for (int a = 0; a < p; ++a)
                for (int b = a + 1; b < p; ++b)
                    if (perm[a] > perm[b]) ++inv;
            Scalar c = q_pi(ctx, idx, perm);
            if (inv % 2) c = -c;
            std::vector<std::pair<Monomial, GroupElement>> pairs;
            for (int t = 0; t < p; ++t)
                pairs.emplace_back(Monomial::gen(N, idx[perm[t]]), e);
            SkewElement val = f.eval(pairs);
            for (const auto& [k, cv] : val.terms())
                out.add_term(k.first, k.second, I, c * cv);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

SkewBarCochain circle_skew(const SkewBarCochain& f, const SkewBarCochain& g, int k) {
    if (k < 1 || k > f.degree) throw std::invalid_argument("circle_skew: slot out of range");
    if (f.grp.get() != g.grp.get()) throw std::invalid_argument("circle_skew: different groups");
    SkewBarCochain out;
    out.grp = f.grp;
    out.degree = f.degree + g.degree - 1;
    auto feval = f.eval;
    auto geval = g.eval;
    int fdeg = f.degree, gdeg = g.degree;
    GCtx grp = f.grp;
    out.eval = [grp, feval, geval, fdeg, gdeg,
                k](const std::vector<std::pair<Monomial, GroupElement>>& w) {
        if (static_cast<int>(w.size()) != fdeg + gdeg - 1)
            throw std::invalid_argument("circle_skew: word length mismatch");
        std::vector<std::pair<Monomial, GroupElement>> inner_word(
            w.begin() + (k - 1), w.begin() + (k - 1) + gdeg);
        SkewElement inner = geval(inner_word);
        SkewElement out_val(grp);
        for (const auto& [mg, c] : inner.terms()) {
            // value understood in Abar (x) kG: constant A-parts drop
            if (mg.first.is_constant()) continue;
            std::vector<std::pair<Monomial, GroupElement>> outer;
            outer.insert(outer.end(), w.begin(), w.begin() + (k - 1));
            outer.emplace_back(mg.first, mg.second);
            outer.insert(outer.end(), w.begin() + (k - 1) + gdeg, w.end());
            out_val = out_val + feval(outer).scaled(c);
        }
        return out_val;
    };
    return out;
}

SkewBarCochain bracket_skew_bar(const SkewBarCochain& f, const SkewBarCochain& g) {
    const int p = f.degree, q = g.degree;
    struct Piece {
        bool negate;
        SkewBarCochain term;
    };
    auto pieces = std::make_shared<std::vector<Piece>>();
    for (int k = 1; k <= p; ++k)
        pieces->push_back({((q - 1) * (k - 1)) % 2 != 0, circle_skew(f, g, k)});
    for (int k = 1; k <= q; ++k) {
        int e = 1 + (p - 1) * (q - 1) + (p - 1) * (k - 1);
        pieces->push_back({e % 2 != 0, circle_skew(g, f, k)});
    }
    SkewBarCochain out;
    out.grp = f.grp;
    out.degree = p + q - 1;
    GCtx grp = f.grp;
    out.eval = [grp, pieces](const std::vector<std::pair<Monomial, GroupElement>>& w) {
        SkewElement acc(grp);
        for (const auto& piece : *pieces) {
            SkewElement v = piece.term.eval(w);
            acc = piece.negate ? acc - v : acc + v;
        }
        return acc;
    };
    return out;
}

SkewKoszulCochain bracket_skew_pipeline(const SkewKoszulCochain& alpha,
                                        const SkewKoszulCochain& beta) {
    SkewBarCochain f = theta(alpha), g = theta(beta);
    return gamma(bracket_skew_bar(f, g), alpha.degree() + beta.degree() - 1);
}

namespace {

struct SkewBasisTerm {
    Monomial a;
    GroupElement g;
    std::vector<int> J;
    Scalar coeff;
};

SkewBasisTerm skew_basis_term_of(const SkewKoszulCochain& x, const char* who) {
    if (x.terms().size() != 1)
        throw std::invalid_argument(std::string(who) + ": input not of basis form");
    const auto& [key, c] = *x.terms().begin();
    return {std::get<0>(key), std::get<1>(key), std::get<2>(key).indices(), c};
}

/// (1/|G|) sum_h chi_a(h) chi_J(h^{-1}): the coefficient the Reynolds
/// operator leaves on a diagonal basis cochain.
CycNumber reynolds_coefficient(const GCtx& grp, const Monomial& a, const std::vector<int>& J) {
    Monomial jm = Monomial::unit(grp->context()->generators());
    for (int j : J) jm.e[j - 1] = 1;
    CycNumber acc = CycNumber::from_rational(0, grp->context()->cyclotomic_order());
    for (const auto& h : grp->elements())
        acc = acc + grp->chi_monomial(a, h) * grp->chi_monomial(jm, grp->inverse(h));
    return acc * CycNumber::from_rational(Rational(1, grp->group_order()),
                                          grp->context()->cyclotomic_order());
}

} // namespace

SkewKoszulCochain bracket_skew_closed(const SkewKoszulCochain& alpha,
                                      const SkewKoszulCochain& beta) {
    const GCtx& grp = alpha.group();
    if (grp.get() != beta.group().get())
        throw std::invalid_argument("bracket_skew_closed: different groups");
    if (!grp->diagonal())
        throw std::invalid_argument("bracket_skew_closed: diagonal actions only");
    const Ctx& ctx = grp->context();
    const int N = ctx->generators();
    SkewBasisTerm A = skew_basis_term_of(alpha, "bracket_skew_closed");
    SkewBasisTerm B = skew_basis_term_of(beta, "bracket_skew_closed");
    const int p = static_cast<int>(A.J.size());
    const int q = static_cast<int>(B.J.size());
    SkewKoszulCochain out(grp, p + q - 1);

    Scalar rA = ctx->cyc(reynolds_coefficient(grp, A.a, A.J));
    Scalar rB = ctx->cyc(reynolds_coefficient(grp, B.a, B.J));
    Scalar scale = A.coeff * B.coeff * rA * rB;

    auto half = [&](const SkewBasisTerm& outer, const SkewBasisTerm& inner, bool mirrored) {
        const auto& J = outer.J;
        const auto& L = inner.J;
        const int dp = static_cast<int>(J.size());
        if (inner.a.is_constant()) return; // inner value drops in Abar (x) kG
        for (int s = 1; s <= dp; ++s) {
            if (inner.a.e[J[s - 1] - 1] == 0) continue;
            std::vector<int> interleaved;
            interleaved.insert(interleaved.end(), J.begin(), J.begin() + (s - 1));
            interleaved.insert(interleaved.end(), L.begin(), L.end());
            interleaved.insert(interleaved.end(), J.begin() + s, J.end());
            ExtResult ext = ext_reorder(ctx, interleaved);
            if (ext.zero) continue;

            // group element at slot s acts on the later letters of the word
            Scalar prefactor = Scalar::one();
            for (int t = s; t < dp; ++t)
                prefactor *= ctx->cyc(grp->chi(J[t], inner.g));

            // Psi on (x_{j_1}, ..., x^b at slot s, ..., x_{j_dp}), wedge J only
            std::vector<Monomial> word;
            for (int t = 0; t < dp; ++t)
                word.push_back(t == s - 1 ? inner.a : Monomial::gen(N, J[t]));
            ExtIndex jmask = ExtIndex::of(J);
            KoszulElem K = psi(ctx, word);
            AlgebraElement val(ctx);
            for (const auto& [k, c] : K.terms()) {
                if (!(k.wedge == jmask)) continue;
                auto [c1, ua] = multiply_monomials(ctx, k.left, outer.a);
                auto [cv, vg] = grp->act_monomial(outer.g, k.right);
                auto [c2, uav] = multiply_monomials(ctx, ua, vg);
                val.add_term(uav, c * c1 * cv * c2);
            }

            GroupElement gh = grp->compose(outer.g, inner.g);
            int sign_exp = mirrored ? (p - 1) * (q - 1) + (p - 1) * (s - 1) + 1
                                    : (q - 1) * (s - 1);
            Scalar sgn = (sign_exp % 2 == 0) ? Scalar::one() : -Scalar::one();
            for (const auto& [m, c] : val.terms())
                out.add_term(m, gh, ext.index, scale * sgn * prefactor * ext.coeff * c);
        }
    };
    half(A, B, false);
    half(B, A, true);
    return out;
}

bool is_coboundary(const SkewKoszulCochain& x) {
    const GCtx& grp = x.group();
    const Ctx& ctx = grp->context();
    if (x.is_zero()) return true;
    if (ctx->symbolic_mode())
        throw std::invalid_argument(
            "is_coboundary: symbolic mode unsupported; specialize the q values first");
    const int N = ctx->generators();
    const int p = x.degree();

    // Stratum of a term: the group element and gamma = a - I, both preserved
    // by the differential.
    struct Stratum {
        GroupElement g;
        std::vector<int> gamma;
        bool operator<(const Stratum& o) const {
            return std::tie(g, gamma) < std::tie(o.g, o.gamma);
        }
    };
    auto stratum_of = [&](const std::tuple<Monomial, GroupElement, ExtIndex>& key) {
        const auto& [a, g, I] = key;
        std::vector<int> gamma(N);
        for (int i = 0; i < N; ++i) gamma[i] = a.e[i] - (I.contains(i + 1) ? 1 : 0);
        return Stratum{g, gamma};
    };
    auto stratum_elems = [&](const Stratum& s, int wedge_size) {
        std::vector<std::pair<Monomial, ExtIndex>> out;
        for (const auto& I : wedges_of_size(N, wedge_size)) {
            Monomial a = Monomial::unit(N);
            bool ok = true;
            for (int i = 0; i < N; ++i) {
                a.e[i] = s.gamma[i] + (I.contains(i + 1) ? 1 : 0);
                if (a.e[i] < 0) ok = false;
            }
            if (ok) out.emplace_back(a, I);
        }
        return out;
    };

    std::map<Stratum, std::map<std::pair<Monomial, ExtIndex>, CycNumber>> rhs;
    for (const auto& [k, c] : x.terms())
        rhs[stratum_of(k)][{std::get<0>(k), std::get<2>(k)}] = c.constant_value();

    for (const auto& [stratum, target] : rhs) {
        auto unknowns = p >= 1 ? stratum_elems(stratum, p - 1)
                               : std::vector<std::pair<Monomial, ExtIndex>>{};
        auto rows = stratum_elems(stratum, p);
        std::map<std::pair<Monomial, ExtIndex>, int> row_of;
        for (size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = static_cast<int>(r);

        const int R = static_cast<int>(rows.size());
        const int C = static_cast<int>(unknowns.size());
        std::vector<std::vector<CycNumber>> M(R, std::vector<CycNumber>(C + 1));
        for (int cidx = 0; cidx < C; ++cidx) {
            SkewKoszulCochain basis =
                SkewKoszulCochain::basis(grp, unknowns[cidx].first, stratum.g,
                                         unknowns[cidx].second);
            SkewKoszulCochain d = skew_diff(basis);
            for (const auto& [k, c] : d.terms()) {
                auto it = row_of.find({std::get<0>(k), std::get<2>(k)});
                if (it == row_of.end()) throw std::logic_error("is_coboundary: stratum leak");
                M[it->second][cidx] = c.constant_value();
            }
        }
        for (const auto& [key, c] : target) {
            auto it = row_of.find(key);
            if (it == row_of.end()) throw std::logic_error("is_coboundary: stratum leak");
            M[it->second][C] = c;
        }

        // Gaussian elimination over Q(zeta); inconsistent iff a zero row has
        // nonzero right-hand side.
        int pivot_row = 0;
        for (int col = 0; col < C && pivot_row < R; ++col) {
            int sel = -1;
            for (int r = pivot_row; r < R; ++r)
                if (!M[r][col].is_zero()) {
                    sel = r;
                    break;
                }
            if (sel < 0) continue;
            std::swap(M[sel], M[pivot_row]);
            CycNumber inv = M[pivot_row][col].inverse();
            for (int cc = col; cc <= C; ++cc) M[pivot_row][cc] = M[pivot_row][cc] * inv;
            for (int r = 0; r < R; ++r) {
                if (r == pivot_row || M[r][col].is_zero()) continue;
                CycNumber factor = M[r][col];
                for (int cc = col; cc <= C; ++cc)
                    M[r][cc] = M[r][cc] - factor * M[pivot_row][cc];
            }
            ++pivot_row;
        }
        for (int r = 0; r < R; ++r) {
            bool all_zero = true;
            for (int cidx = 0; cidx < C; ++cidx)
                if (!M[r][cidx].is_zero()) {
                    all_zero = false;
                    break;
                }
            if (all_zero && !M[r][C].is_zero()) return false;
        }
    }
    return true;
}

KoszulCochain forget_group(const SkewKoszulCochain& x) {
    KoszulCochain out(x.group()->context(), x.degree());
    for (const auto& [k, c] : x.terms()) out.add_term(std::get<0>(k), std::get<2>(k), c);
    return out;
}

SkewKoszulCochain with_trivial_group(const GCtx& grp, const KoszulCochain& x) {
    SkewKoszulCochain out(grp, x.degree());
    GroupElement e = grp->identity();
    for (const auto& [k, c] : x.terms()) out.add_term(k.first, e, k.second, c);
    return out;
}

} // namespace qsa
