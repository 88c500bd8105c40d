#include "qsa/verify.hpp"

#include <future>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qsa/enumerate.hpp"

namespace qsa {

namespace {

using CheckFn = std::function<CheckResult()>;

CheckFn check(std::string suite, std::string name, std::function<std::string()> body) {
    return [suite = std::move(suite), name = std::move(name), body = std::move(body)]() {
        CheckResult r{suite, name, false, ""};
        try {
            r.counterexample = body();
            r.pass = r.counterexample.empty();
        } catch (const std::exception& e) {
            r.pass = false;
            r.counterexample = std::string("exception: ") + e.what();
        }
        return r;
    };
}

std::vector<KoszulElem> koszul_corpus(const Ctx& ctx, int p, int cap) {
    std::vector<KoszulElem> out;
    for (const auto& w : wedges_of_size(ctx->generators(), p))
        for (const auto& m : monomials_up_to(ctx->generators(), cap))
            out.push_back(KoszulElem::basis(ctx, w, m));
    return out;
}

std::vector<BarElem> bar_corpus(const Ctx& ctx, int p, int entry_cap, int right_cap) {
    std::vector<BarElem> out;
    auto entries = monomials_up_to(ctx->generators(), entry_cap, 1);
    auto rights = monomials_up_to(ctx->generators(), right_cap);
    for (const auto& w : words_over(entries, p))
        for (const auto& r : rights) out.push_back(BarElem::basis(ctx, w, r));
    return out;
}

Scalar small_random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    int v = d(rng);
    if (v == 0) v = 1;
    return Scalar::from_rational(v);
}

Monomial random_monomial(std::mt19937& rng, int N, int cap) {
    std::uniform_int_distribution<int> d(0, cap);
    Monomial m = Monomial::unit(N);
    for (int i = 0; i < N; ++i) m.e[i] = d(rng) % (cap + 1);
    return m;
}

void suite_koszul(std::vector<CheckFn>& checks, const VerifySetup& s) {
    const Ctx ctx = s.ctx;
    const Bounds b = s.bounds;
    checks.push_back(check("koszul", "d-squared", [ctx, b]() -> std::string {
        for (int p = 1; p <= std::min(b.max_p + 1, ctx->generators()); ++p)
            for (const auto& x : koszul_corpus(ctx, p, b.degree_cap))
                if (!koszul_d(koszul_d(x)).is_zero())
                    return "d(d(x)) != 0 for " + x.debug_string();
        return "";
    }));
    checks.push_back(check("koszul", "bar-delta-squared", [ctx, b]() -> std::string {
        for (int p = 1; p <= b.max_p; ++p)
            for (const auto& x : bar_corpus(ctx, p, b.max_entry_degree, 1))
                if (!bar_delta(bar_delta(x)).is_zero())
                    return "delta(delta(x)) != 0 for " + x.debug_string();
        return "";
    }));
}

void suite_homotopy(std::vector<CheckFn>& checks, const VerifySetup& s) {
    const Ctx ctx = s.ctx;
    const Bounds b = s.bounds;
    checks.push_back(check("homotopy", "koszul-contraction", [ctx, b]() -> std::string {
        for (int p = 0; p <= std::min(b.max_p, ctx->generators()); ++p) {
            auto rep = verify_homotopy_koszul(koszul_corpus(ctx, p, b.degree_cap));
            if (!rep.ok) return rep.counterexample;
        }
        return "";
    }));
    checks.push_back(check("homotopy", "bar-contraction", [ctx, b]() -> std::string {
        for (int p = 0; p <= b.max_p; ++p) {
            auto rep = verify_homotopy_bar(bar_corpus(ctx, p, b.max_entry_degree, b.max_entry_degree));
            if (!rep.ok) return rep.counterexample;
        }
        return "";
    }));
}

void suite_chainmaps(std::vector<CheckFn>& checks, const VerifySetup& s) {
    const Ctx ctx = s.ctx;
    const Bounds b = s.bounds;
    const int N = ctx->generators();
    checks.push_back(check("chainmaps", "phi-chain-map", [ctx, b, N]() -> std::string {
        for (int p = 1; p <= std::min(b.max_p + 1, N); ++p)
            for (const auto& w : wedges_of_size(N, p)) {
                KoszulElem basis = KoszulElem::basis(ctx, w, Monomial::unit(N));
                if (!(bar_delta(apply_phi(basis)) == apply_phi(koszul_d(basis))))
                    return "delta(phi(x)) != phi(d(x)) on " + basis.debug_string();
            }
        return "";
    }));
    checks.push_back(check("chainmaps", "psi-chain-map", [ctx, b, N]() -> std::string {
        auto entries = monomials_up_to(N, b.max_entry_degree, 1);
        for (int p = 1; p <= b.max_p; ++p)
            for (const auto& w : words_over(entries, p)) {
                BarElem basis = BarElem::basis(ctx, w, Monomial::unit(N));
                if (!(koszul_d(apply_psi(basis)) == apply_psi(bar_delta(basis))))
                    return "d(psi(x)) != psi(delta(x)) on " + basis.debug_string();
            }
        return "";
    }));
    checks.push_back(check("chainmaps", "psi-phi-identity", [ctx, b, N]() -> std::string {
        for (int p = 0; p <= std::min(b.max_p + 1, N); ++p)
            for (const auto& w : wedges_of_size(N, p)) {
                KoszulElem basis = KoszulElem::basis(ctx, w, Monomial::unit(N));
                if (!(apply_psi(apply_phi(basis)) == basis))
                    return "psi(phi(x)) != x on " + basis.debug_string();
            }
        return "";
    }));
    checks.push_back(check("chainmaps", "lift-reproduces-phi", [ctx, b, N]() -> std::string {
        KoszulToBarLift lift(ctx);
        for (int p = 0; p <= std::min(b.max_p + 1, N); ++p)
            for (const auto& w : wedges_of_size(N, p))
                if (!(lift.image(w) == phi(ctx, w)))
                    return "lifted map differs from phi on wedge of size " +
                           std::to_string(p);
        return "";
    }));
    checks.push_back(check("chainmaps", "lift-reproduces-psi", [ctx, b, N]() -> std::string {
        BarToKoszulLift lift(ctx);
        auto entries = monomials_up_to(N, b.max_entry_degree, 1);
        for (int p = 1; p <= b.max_p; ++p)
            for (const auto& w : words_over(entries, p))
                if (!(lift.image(w) == psi(ctx, w))) {
                    return "lifted map differs from psi on " +
                           BarElem::basis(ctx, w, Monomial::unit(N)).debug_string();
                }
        return "";
    }));
    checks.push_back(check("chainmaps", "tau-commutes", [ctx, N]() -> std::string {
        std::mt19937 rng(12345);
        for (int trial = 0; trial < 10; ++trial) {
            EnvElem x(ctx);
            for (int t = 0; t < 3; ++t)
                x.add_term(random_monomial(rng, N, 3), random_monomial(rng, N, 3),
                           small_random_scalar(rng));
            for (int i = 1; i <= N; ++i)
                for (int j = i + 1; j <= N; ++j)
                    if (!(tau(i, tau(j, x)) == tau(j, tau(i, x))))
                        return "tau_i tau_j != tau_j tau_i";
        }
        return "";
    }));
    checks.push_back(check("chainmaps", "geometric-sum", [ctx, N]() -> std::string {
        for (int i = 1; i <= N; ++i) {
            for (int l = 1; l <= 6; ++l) {
                Monomial xi = Monomial::gen(N, i);
                Monomial xl = Monomial::unit(N);
                xl.e[i - 1] = l;
                Monomial unit = Monomial::unit(N);
                EnvElem lhs = EnvElem::term(ctx, xi, unit) - EnvElem::term(ctx, unit, xi);
                EnvElem geo(ctx);
                for (int r = 1; r <= l; ++r) {
                    Monomial u = Monomial::unit(N), v = Monomial::unit(N);
                    u.e[i - 1] = l - r;
                    v.e[i - 1] = r - 1;
                    geo.add_term(u, v, Scalar::one());
                }
                EnvElem rhs = EnvElem::term(ctx, xl, unit) - EnvElem::term(ctx, unit, xl);
                if (!(lhs * geo == rhs)) return "geometric sum identity fails";
            }
        }
        return "";
    }));
    checks.push_back(check("chainmaps", "t-via-dq", [ctx, b, N]() -> std::string {
        for (int p = 0; p <= std::min(b.max_p, N); ++p)
            for (const auto& w : wedges_of_size(N, p))
                for (const auto& m : monomials_up_to(N, std::min(b.degree_cap, 3))) {
                    EnvExtElem z = EnvExtElem::term(ctx, Monomial::unit(N), m, w);
                    if (!(t_via_dq(z) == koszul_t(sigma(z))))
                        return "difference-quotient form of t differs on " +
                               sigma(z).debug_string();
                }
        return "";
    }));
    checks.push_back(check("chainmaps", "psi-via-dq", [ctx, b, N]() -> std::string {
        auto entries = monomials_up_to(N, b.max_entry_degree, 1);
        for (int p = 1; p <= std::min(b.max_p, 2); ++p)
            for (const auto& w : words_over(entries, p))
                if (!(psi_via_dq(ctx, w) == psi(ctx, w)))
                    return "difference-quotient form of psi differs on " +
                           BarElem::basis(ctx, w, Monomial::unit(N)).debug_string();
        return "";
    }));
}

void suite_bracket(std::vector<CheckFn>& checks, const VerifySetup& s) {
    const Ctx ctx = s.ctx;
    const Bounds b = s.bounds;
    const int N = ctx->generators();
    checks.push_back(check("bracket", "graded-antisymmetry", [ctx, b, N]() -> std::string {
        std::vector<KoszulCochain> corpus;
        for (int m = 1; m <= std::min(2, N); ++m)
            for (auto& c : hh_basis(ctx, m, std::min(b.degree_cap, 3))) corpus.push_back(c);
        auto entries = monomials_up_to(N, std::min(b.max_entry_degree, 2), 1);
        for (const auto& a : corpus) {
            for (const auto& bb : corpus) {
                int p = a.degree(), q = bb.degree();
                BarCochain f = from_koszul(a), g = from_koszul(bb);
                BarCochain fg = bracket_bar(f, g), gf = bracket_bar(g, f);
                int sign = ((p - 1) * (q - 1)) % 2 == 0 ? -1 : 1;
                for (const auto& w : words_over(entries, p + q - 1)) {
                    AlgebraElement lhs = fg.eval(w);
                    AlgebraElement rhs = gf.eval(w).scaled(Scalar::from_rational(sign));
                    if (!(lhs == rhs))
                        return "[f,g] != -(-1)^{(p-1)(q-1)}[g,f] on " + a.debug_string() +
                               " , " + bb.debug_string();
                }
            }
        }
        return "";
    }));
    checks.push_back(check("bracket", "graded-jacobi", [ctx, b, N]() -> std::string {
        std::vector<KoszulCochain> corpus;
        for (int m = 1; m <= std::min(2, N); ++m)
            for (auto& c : hh_basis(ctx, m, 2)) corpus.push_back(c);
        if (corpus.empty()) return "";
        std::mt19937 rng(777);
        std::uniform_int_distribution<size_t> pick(0, corpus.size() - 1);
        auto entries = monomials_up_to(N, std::min(b.max_entry_degree, 2), 1);
        for (int trial = 0; trial < 10; ++trial) {
            const auto& A = corpus[pick(rng)];
            const auto& B = corpus[pick(rng)];
            const auto& C = corpus[pick(rng)];
            int p = A.degree(), q = B.degree(), r = C.degree();
            BarCochain f = from_koszul(A), g = from_koszul(B), h = from_koszul(C);
            // (-1)^{(p-1)(r-1)}[f,[g,h]] + cycled terms = 0
            BarCochain t1 = bracket_bar(f, bracket_bar(g, h));
            BarCochain t2 = bracket_bar(g, bracket_bar(h, f));
            BarCochain t3 = bracket_bar(h, bracket_bar(f, g));
            int s1 = ((p - 1) * (r - 1)) % 2 ? -1 : 1;
            int s2 = ((q - 1) * (p - 1)) % 2 ? -1 : 1;
            int s3 = ((r - 1) * (q - 1)) % 2 ? -1 : 1;
            int len = p + q + r - 2;
            for (const auto& w : words_over(entries, len)) {
                AlgebraElement acc = t1.eval(w).scaled(Scalar::from_rational(s1)) +
                                     t2.eval(w).scaled(Scalar::from_rational(s2)) +
                                     t3.eval(w).scaled(Scalar::from_rational(s3));
                if (!acc.is_zero()) return "graded Jacobi fails";
            }
        }
        return "";
    }));
    checks.push_back(check("bracket", "closed-vs-pipeline", [ctx, b, N]() -> std::string {
        std::vector<KoszulCochain> corpus;
        for (int m = 1; m <= N; ++m)
            for (auto& c : hh_basis(ctx, m, std::min(b.degree_cap, 3))) corpus.push_back(c);
        for (const auto& a : corpus) {
            for (const auto& bb : corpus) {
                if (a.degree() + bb.degree() > 4) continue;
                if (!(bracket_closed(a, bb) == bracket_pipeline(a, bb)))
                    return "closed form differs from pipeline on " + a.debug_string() +
                           " , " + bb.debug_string();
            }
        }
        return "";
    }));
    if (ctx->is_classical()) {
        checks.push_back(check("bracket", "schouten-classical", [ctx, b, N]() -> std::string {
            std::vector<KoszulCochain> corpus;
            for (int m = 1; m <= N; ++m)
                for (auto& c : hh_basis(ctx, m, std::min(b.degree_cap, 3)))
                    corpus.push_back(c);
            for (const auto& a : corpus) {
                for (const auto& bb : corpus) {
                    if (a.degree() + bb.degree() > 4) continue;
                    if (!(bracket_closed(a, bb) == schouten_classical(a, bb)))
                        return "closed form differs from the Schouten bracket on " +
                               a.debug_string() + " , " + bb.debug_string();
                }
            }
            return "";
        }));
    }
}

void suite_skew(std::vector<CheckFn>& checks, const VerifySetup& s) {
    if (!s.grp) throw std::invalid_argument("suite 'skew' requires a configured group");
    const GCtx grp = s.grp;
    const Ctx ctx = s.ctx;
    const int N = ctx->generators();
    checks.push_back(check("skew", "action-valid", [grp]() -> std::string {
        auto v = validate_action(grp);
        return v ? v->message : "";
    }));
    if (grp->diagonal()) {
        checks.push_back(check("skew", "d-squared", [grp, ctx, N]() -> std::string {
            for (const auto& g : grp->elements())
                for (int p = 0; p + 2 <= N; ++p)
                    for (const auto& w : wedges_of_size(N, p))
                        for (const auto& a : monomials_up_to(N, 2)) {
                            auto x = SkewKoszulCochain::basis(grp, a, g, w);
                            if (!skew_diff(skew_diff(x)).is_zero())
                                return "d(d(x)) != 0 for " + x.debug_string();
                        }
            return "";
        }));
        checks.push_back(check("skew", "cg-strata-closed", [grp, N]() -> std::string {
            for (int m = 0; m < N; ++m)
                for (const auto& x : hh_skew_basis(grp, m, 2))
                    if (!skew_diff(x).is_zero())
                        return "differential nonzero on C_g stratum element " +
                               x.debug_string();
            return "";
        }));
        checks.push_back(check("skew", "closed-vs-pipeline", [grp, N]() -> std::string {
            std::vector<SkewKoszulCochain> corpus;
            for (int m = 1; m <= N; ++m)
                for (auto& c : hh_skew_basis(grp, m, 2)) corpus.push_back(c);
            for (const auto& a : corpus) {
                for (const auto& b : corpus) {
                    if (a.degree() + b.degree() > 3) continue;
                    auto closed = bracket_skew_closed(a, b);
                    auto piped = bracket_skew_pipeline(reynolds(a), reynolds(b));
                    if (!(closed == piped))
                        return "closed form differs from pipeline on " + a.debug_string() +
                               " , " + b.debug_string();
                }
            }
            return "";
        }));
    }
    checks.push_back(check("skew", "reynolds-idempotent", [grp, ctx, N]() -> std::string {
        std::mt19937 rng(999);
        for (int trial = 0; trial < 8; ++trial) {
            SkewKoszulCochain x(grp, 1);
            auto wedges = wedges_of_size(N, 1);
            auto gs = grp->elements();
            for (int t = 0; t < 3; ++t) {
                std::uniform_int_distribution<size_t> pw(0, wedges.size() - 1),
                    pg(0, gs.size() - 1);
                x.add_term(random_monomial(rng, N, 2), gs[pg(rng)], wedges[pw(rng)],
                           small_random_scalar(rng));
            }
            SkewKoszulCochain r = reynolds(x);
            if (!(reynolds(r) == r)) return "reynolds not idempotent";
            if (!is_invariant(r)) return "reynolds image not invariant";
        }
        return "";
    }));
    checks.push_back(check("skew", "gamma-theta-identity", [grp, N]() -> std::string {
        for (const auto& g : grp->elements())
            for (int m = 1; m <= std::min(2, N); ++m)
                for (const auto& w : wedges_of_size(N, m))
                    for (const auto& a : monomials_up_to(N, 2)) {
                        SkewKoszulCochain r =
                            reynolds(SkewKoszulCochain::basis(grp, a, g, w));
                        if (!(gamma(theta(r), m) == r))
                            return "gamma(theta(x)) != x on " + r.debug_string();
                    }
        return "";
    }));
    checks.push_back(check("skew", "unit-cocycle-brackets", [grp, N]() -> std::string {
        for (const auto& g : grp->elements())
            for (const auto& h : grp->elements())
                for (int pj = 1; pj <= std::min(2, N); ++pj)
                    for (int pl = 1; pl <= std::min(2, N); ++pl)
                        for (const auto& J : wedges_of_size(N, pj))
                            for (const auto& L : wedges_of_size(N, pl)) {
                                auto a = reynolds(SkewKoszulCochain::basis(
                                    grp, Monomial::unit(N), g, J));
                                auto b = reynolds(SkewKoszulCochain::basis(
                                    grp, Monomial::unit(N), h, L));
                                if (a.is_zero() || b.is_zero()) continue;
                                if (!bracket_skew_pipeline(a, b).is_zero())
                                    return "bracket of unit-coefficient cocycles "
                                           "nonzero: " +
                                           a.debug_string() + " , " + b.debug_string();
                            }
        return "";
    }));
}

} // namespace

std::vector<CheckResult> run_suite(const VerifySetup& setup, const std::string& suite,
                                   int workers) {
    std::vector<CheckFn> checks;
    bool known = false;
    if (suite == "koszul" || suite == "all") {
        suite_koszul(checks, setup);
        known = true;
    }
    if (suite == "homotopy" || suite == "all") {
        suite_homotopy(checks, setup);
        known = true;
    }
    if (suite == "chainmaps" || suite == "all") {
        suite_chainmaps(checks, setup);
        known = true;
    }
    if (suite == "bracket" || suite == "all") {
        suite_bracket(checks, setup);
        known = true;
    }
    if (suite == "skew" || (suite == "all" && setup.grp)) {
        suite_skew(checks, setup);
        known = true;
    }
    if (!known) throw std::invalid_argument("unknown suite: " + suite);

    std::vector<CheckResult> results(checks.size());
    if (workers <= 1) {
        for (size_t i = 0; i < checks.size(); ++i) results[i] = checks[i]();
        return results;
    }
    std::vector<std::future<CheckResult>> futures;
    futures.reserve(checks.size());
    for (auto& fn : checks) futures.push_back(std::async(std::launch::async, fn));
    for (size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
    return results;
}

} // namespace qsa
