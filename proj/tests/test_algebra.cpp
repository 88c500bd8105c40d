#include <doctest.h>

#include <random>

#include "qsa/algebra.hpp"

using namespace qsa;

namespace {

// Independent oracle: normal-order a word by literal adjacent swaps, one
// relation application at a time.
std::pair<Scalar, Monomial> bubble_normalize(const Ctx& ctx, Word w) {
    Scalar c = Scalar::one();
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] > w[i + 1]) {
                c *= ctx->q_power(w[i], w[i + 1], 1);
                std::swap(w[i], w[i + 1]);
                moved = true;
            }
        }
    }
    return {c, monomial_of_word(ctx->generators(), w)};
}

Word random_word(std::mt19937& rng, int N, int len) {
    std::uniform_int_distribution<int> d(1, N);
    Word w(len);
    for (auto& x : w) x = d(rng);
    return w;
}

} // namespace

TEST_CASE("twist_reorder on the basic rearrangements") {
    Ctx ctx = QContext::symbolic(3);
    {
        auto [c, m] = twist_reorder(ctx, {1});
        CHECK(c.is_one());
        CHECK(m == Monomial::gen(3, 1));
    }
    {
        auto [c, m] = twist_reorder(ctx, {2, 1});
        CHECK(c == ctx->q_power(1, 2, -1));
        CHECK(m == monomial_of_word(3, {1, 2}));
    }
    {
        auto [c, m] = twist_reorder(ctx, {3, 2, 1});
        CHECK(c == ctx->q_power(1, 2, -1) * ctx->q_power(1, 3, -1) * ctx->q_power(2, 3, -1));
        CHECK(m == monomial_of_word(3, {1, 2, 3}));
    }
}

TEST_CASE("twist_reorder agrees with the adjacent-swap oracle") {
    Ctx ctx = QContext::symbolic(3);
    std::mt19937 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        Word w = random_word(rng, 3, 1 + trial % 6);
        auto [c1, m1] = twist_reorder(ctx, w);
        auto [c2, m2] = bubble_normalize(ctx, w);
        CHECK(c1 == c2);
        CHECK(m1 == m2);
    }
}

TEST_CASE("monomial products") {
    Ctx ctx = QContext::symbolic(3);
    auto elem = [&](std::initializer_list<int> gens) {
        AlgebraElement r = AlgebraElement::one(ctx);
        for (int g : gens)
            r = multiply(r, AlgebraElement::monomial(ctx, Monomial::gen(3, g)));
        return r;
    };
    CHECK(elem({1, 1, 1}) ==
          AlgebraElement::monomial(ctx, monomial_of_word(3, {1, 1, 1})));
    CHECK(elem({2, 1}) == AlgebraElement::monomial(ctx, monomial_of_word(3, {1, 2}),
                                                   ctx->q_power(1, 2, -1)));
    // (x2 x3)(x1 x2) = q12^-1 q13^-1 q23^-1 x1 x2^2 x3
    AlgebraElement lhs = multiply(
        AlgebraElement::monomial(ctx, monomial_of_word(3, {2, 3})),
        AlgebraElement::monomial(ctx, monomial_of_word(3, {1, 2})));
    Scalar expect =
        ctx->q_power(1, 2, -1) * ctx->q_power(1, 3, -1) * ctx->q_power(2, 3, -1);
    CHECK(lhs == AlgebraElement::monomial(ctx, monomial_of_word(3, {1, 2, 2, 3}), expect));
}

TEST_CASE("multiply respects twist_reorder on words") {
    Ctx ctx = QContext::symbolic(4);
    std::mt19937 rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        Word w = random_word(rng, 4, 1 + trial % 7);
        AlgebraElement prod = AlgebraElement::one(ctx);
        for (int g : w)
            prod = multiply(prod, AlgebraElement::monomial(ctx, Monomial::gen(4, g)));
        auto [c, m] = twist_reorder(ctx, w);
        CHECK(prod == AlgebraElement::monomial(ctx, m, c));
    }
}

TEST_CASE("q_pi coefficients") {
    Ctx ctx = QContext::symbolic(3);
    CHECK(q_pi(ctx, {1, 2}, {0, 1}).is_one());
    CHECK(q_pi(ctx, {1, 2}, {1, 0}) == ctx->q_power(1, 2, 1));
    CHECK(q_pi(ctx, {1, 2, 3}, {2, 1, 0}) ==
          ctx->q_power(1, 2, 1) * ctx->q_power(1, 3, 1) * ctx->q_power(2, 3, 1));
    // defining property: q_pi * product(permuted) = product(increasing)
    std::mt19937 rng(77);
    std::vector<int> I{1, 2, 3};
    std::vector<int> pi{0, 1, 2};
    for (int trial = 0; trial < 6; ++trial) {
        std::shuffle(pi.begin(), pi.end(), rng);
        Word permuted;
        for (int k : pi) permuted.push_back(I[k]);
        auto [cp, mp] = twist_reorder(ctx, permuted);
        CHECK(q_pi(ctx, I, pi) * cp == Scalar::one());
        CHECK(mp == monomial_of_word(3, I));
    }
}

TEST_CASE("quantum exterior reordering") {
    Ctx ctx = QContext::symbolic(3);
    {
        ExtResult r = ext_reorder(ctx, {1, 2});
        CHECK(!r.zero);
        CHECK(r.coeff.is_one());
        CHECK(r.index == ExtIndex::of({1, 2}));
    }
    {
        ExtResult r = ext_reorder(ctx, {2, 1});
        CHECK(!r.zero);
        CHECK(r.coeff == -ctx->q_power(1, 2, 1));
        CHECK(r.index == ExtIndex::of({1, 2}));
    }
    CHECK(ext_reorder(ctx, {1, 1}).zero);
    CHECK(ext_reorder(ctx, {2, 1, 2}).zero);
}

TEST_CASE("exterior reordering against an adjacent-swap oracle") {
    // dx_a dx_b = -q_{ab}^{-1} dx_b dx_a applied one swap at a time
    Ctx ctx = QContext::symbolic(4);
    std::mt19937 rng(202);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> w{1, 2, 3, 4};
        std::shuffle(w.begin(), w.end(), rng);
        int len = 2 + trial % 3;
        w.resize(len);
        Scalar c = Scalar::one();
        std::vector<int> sorted = w;
        bool moved = true;
        while (moved) {
            moved = false;
            for (size_t i = 0; i + 1 < sorted.size(); ++i) {
                if (sorted[i] > sorted[i + 1]) {
                    c *= -(ctx->q_power(sorted[i], sorted[i + 1], -1));
                    std::swap(sorted[i], sorted[i + 1]);
                    moved = true;
                }
            }
        }
        ExtResult r = ext_reorder(ctx, w);
        CHECK(!r.zero);
        CHECK(r.coeff == c);
        CHECK(r.index == ExtIndex::of(sorted));
    }
}
