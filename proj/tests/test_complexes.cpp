#include <doctest.h>

#include <random>

#include "qsa/complexes.hpp"
#include "qsa/enumerate.hpp"

using namespace qsa;

namespace {

KoszulElem kelem(const Ctx& ctx, int deg,
                 std::initializer_list<std::tuple<Word, std::vector<int>, Word, Scalar>> terms) {
    KoszulElem x(ctx, deg);
    const int N = ctx->generators();
    for (const auto& [l, w, r, c] : terms)
        x.add_term(monomial_of_word(N, l), ExtIndex::of(w), monomial_of_word(N, r), c);
    return x;
}

BarElem belem(const Ctx& ctx, int deg,
              std::initializer_list<std::tuple<Word, std::vector<Word>, Word, Scalar>> terms) {
    BarElem x(ctx, deg);
    const int N = ctx->generators();
    for (const auto& [l, w, r, c] : terms) {
        std::vector<Monomial> word;
        for (const auto& entry : w) word.push_back(monomial_of_word(N, entry));
        x.add_term(monomial_of_word(N, l), word, monomial_of_word(N, r), c);
    }
    return x;
}

// Section-3-style polynomial contraction, transcribed directly as an oracle
// for the q = 1 specialization.
KoszulElem classical_t_oracle(const KoszulElem& x) {
    const Ctx& ctx = x.context();
    const int N = ctx->generators();
    if (x.degree() == -1) return koszul_t(x); // boundary map shared
    KoszulElem out(ctx, x.degree() + 1);
    Scalar sign = (x.degree() % 2 == 0) ? -Scalar::one() : Scalar::one();
    for (const auto& [k, c] : x.terms()) {
        auto J = k.wedge.indices();
        int lo = J.empty() ? 1 : J.back() + 1;
        for (int j = lo; j <= N; ++j) {
            for (int r = 1; r <= k.right.e[j - 1]; ++r) {
                Monomial lm = Monomial::unit(N), rm = Monomial::unit(N);
                lm.e[j - 1] = k.right.e[j - 1] - r;
                for (int t = j + 1; t <= N; ++t) lm.e[t - 1] = k.right.e[t - 1];
                for (int t = 1; t < j; ++t) rm.e[t - 1] = k.right.e[t - 1];
                rm.e[j - 1] = r - 1;
                for (int t = 0; t < N; ++t) lm.e[t] += k.left.e[t]; // q=1: plain product
                std::vector<int> wedge = J;
                wedge.push_back(j);
                out.add_term(lm, ExtIndex::of(wedge), rm, c * sign);
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("koszul differential in low degrees") {
    Ctx ctx = QContext::symbolic(2);
    KoszulElem d1 = koszul_d(KoszulElem::basis(ctx, ExtIndex::of({1}), Monomial::unit(2)));
    CHECK(d1 == kelem(ctx, 0, {{{1}, {}, {}, Scalar::one()}, {{}, {}, {1}, -Scalar::one()}}));

    KoszulElem d2 = koszul_d(KoszulElem::basis(ctx, ExtIndex::of({1, 2}), Monomial::unit(2)));
    Scalar q12 = ctx->q_power(1, 2, 1);
    CHECK(d2 == kelem(ctx, 1,
                      {{{1}, {2}, {}, Scalar::one()},
                       {{2}, {1}, {}, -q12},
                       {{}, {2}, {1}, -q12},
                       {{}, {1}, {2}, Scalar::one()}}));
}

TEST_CASE("koszul differential reduces to the polynomial one at q = 1") {
    Ctx cl = QContext::classical(3);
    for (int p = 1; p <= 3; ++p) {
        for (const auto& w : wedges_of_size(3, p)) {
            KoszulElem d = koszul_d(KoszulElem::basis(cl, w, Monomial::unit(3)));
            // every coefficient is +-1 and the signs alternate per slot
            auto J = w.indices();
            KoszulElem expect(cl, p - 1);
            for (int i = 0; i < p; ++i) {
                std::vector<int> rest;
                for (int s = 0; s < p; ++s)
                    if (s != i) rest.push_back(J[s]);
                Scalar sign = (i % 2 == 0) ? Scalar::one() : -Scalar::one();
                expect.add_term(Monomial::gen(3, J[i]), ExtIndex::of(rest), Monomial::unit(3),
                                sign);
                expect.add_term(Monomial::unit(3), ExtIndex::of(rest), Monomial::gen(3, J[i]),
                                -sign);
            }
            CHECK(d == expect);
        }
    }
}

TEST_CASE("bar differential in low degrees") {
    Ctx ctx = QContext::symbolic(2);
    BarElem b1 = bar_delta(belem(ctx, 1, {{{}, {{1}}, {}, Scalar::one()}}));
    CHECK(b1 == belem(ctx, 0, {{{1}, {}, {}, Scalar::one()}, {{}, {}, {1}, -Scalar::one()}}));

    BarElem b2 = bar_delta(belem(ctx, 2, {{{}, {{1}, {2}}, {}, Scalar::one()}}));
    CHECK(b2 == belem(ctx, 1,
                      {{{1}, {{2}}, {}, Scalar::one()},
                       {{}, {{1, 2}}, {}, -Scalar::one()},
                       {{}, {{1}}, {2}, Scalar::one()}}));

    BarElem b2r = bar_delta(belem(ctx, 2, {{{}, {{2}, {1}}, {}, Scalar::one()}}));
    CHECK(b2r == belem(ctx, 1,
                       {{{2}, {{1}}, {}, Scalar::one()},
                        {{}, {{1, 2}}, {}, -ctx->q_power(1, 2, -1)},
                        {{}, {{2}}, {1}, Scalar::one()}}));
}

TEST_CASE("koszul contraction in low degrees") {
    Ctx ctx = QContext::symbolic(2);
    // t_{-1}(1) = 1 (x) 1
    KoszulElem tm1 = koszul_t(KoszulElem::from_algebra(AlgebraElement::one(ctx)));
    CHECK(tm1 == kelem(ctx, 0, {{{}, {}, {}, Scalar::one()}}));

    KoszulElem t0a = koszul_t(KoszulElem::basis(ctx, ExtIndex{}, Monomial::gen(2, 1)));
    CHECK(t0a == kelem(ctx, 1, {{{}, {1}, {}, -Scalar::one()}}));

    KoszulElem t0b = koszul_t(KoszulElem::basis(ctx, ExtIndex{}, monomial_of_word(2, {1, 2})));
    Scalar q12 = ctx->q_power(1, 2, 1);
    CHECK(t0b == kelem(ctx, 1, {{{2}, {1}, {}, -q12}, {{}, {2}, {1}, -q12}}));

    // the sum over j_{p+1} is empty once the wedge already ends at N
    KoszulElem tN =
        koszul_t(KoszulElem::basis(ctx, ExtIndex::of({2}), monomial_of_word(2, {1, 1})));
    CHECK(tN.is_zero());
}

TEST_CASE("bar contraction in low degrees") {
    Ctx ctx = QContext::symbolic(2);
    BarElem s0 = bar_s(belem(ctx, 0, {{{}, {}, {1}, Scalar::one()}}));
    CHECK(s0 == belem(ctx, 1, {{{}, {{1}}, {}, -Scalar::one()}}));
    BarElem s1 = bar_s(belem(ctx, 1, {{{}, {{1}}, {2}, Scalar::one()}}));
    CHECK(s1 == belem(ctx, 2, {{{}, {{1}, {2}}, {}, Scalar::one()}}));
    BarElem s_const = bar_s(belem(ctx, 1, {{{}, {{1}}, {}, Scalar::one()}}));
    CHECK(s_const.is_zero());
}

TEST_CASE("contraction reduces to the polynomial one at q = 1") {
    Ctx cl = QContext::classical(3);
    for (int p = 0; p <= 2; ++p)
        for (const auto& w : wedges_of_size(3, p))
            for (const auto& m : monomials_up_to(3, 3)) {
                KoszulElem x = KoszulElem::basis(cl, w, m);
                CHECK(koszul_t(x) == classical_t_oracle(x));
            }
}

TEST_CASE("differentials square to zero") {
    Ctx ctx = QContext::symbolic(3);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> ed(0, 3);
    for (int p = 1; p <= 3; ++p) {
        for (const auto& w : wedges_of_size(3, p)) {
            for (int trial = 0; trial < 5; ++trial) {
                Monomial m = Monomial::unit(3);
                for (int i = 0; i < 3; ++i) m.e[i] = ed(rng);
                CHECK(koszul_d(koszul_d(KoszulElem::basis(ctx, w, m))).is_zero());
            }
        }
    }
    auto entries = monomials_up_to(3, 2, 1);
    std::uniform_int_distribution<size_t> pick(0, entries.size() - 1);
    for (int p = 1; p <= 3; ++p) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Monomial> word;
            for (int i = 0; i < p; ++i) word.push_back(entries[pick(rng)]);
            Monomial right = entries[pick(rng)];
            CHECK(bar_delta(bar_delta(BarElem::basis(ctx, word, right))).is_zero());
        }
    }
}

TEST_CASE("homotopy identities on desk-scale bases") {
    Ctx ctx = QContext::symbolic(2);
    for (int p = 0; p <= 2; ++p) {
        std::vector<KoszulElem> corpus;
        for (const auto& w : wedges_of_size(2, p))
            for (const auto& m : monomials_up_to(2, 4))
                corpus.push_back(KoszulElem::basis(ctx, w, m));
        auto rep = verify_homotopy_koszul(corpus);
        INFO(rep.counterexample);
        CHECK(rep.ok);
    }
    auto entries = monomials_up_to(2, 2, 1);
    for (int p = 0; p <= 2; ++p) {
        std::vector<BarElem> corpus;
        for (const auto& w : words_over(entries, p))
            for (const auto& r : monomials_up_to(2, 2))
                corpus.push_back(BarElem::basis(ctx, w, r));
        auto rep = verify_homotopy_bar(corpus);
        INFO(rep.counterexample);
        CHECK(rep.ok);
    }
    // single-variable Koszul complex
    Ctx one = QContext::symbolic(1);
    std::vector<KoszulElem> corpus;
    for (const auto& m : monomials_up_to(1, 4))
        corpus.push_back(KoszulElem::basis(one, ExtIndex{}, m));
    CHECK(verify_homotopy_koszul(corpus).ok);
}

TEST_CASE("normalized bar output never carries constant middles") {
    Ctx ctx = QContext::symbolic(2);
    auto entries = monomials_up_to(2, 2, 1);
    for (const auto& w : words_over(entries, 3)) {
        BarElem d = bar_delta(BarElem::basis(ctx, w, Monomial::gen(2, 1)));
        for (const auto& [k, c] : d.terms())
            for (const auto& entry : k.word) CHECK(!entry.is_constant());
    }
}
