#include <doctest.h>

#include <random>

#include "qsa/context.hpp"

using namespace qsa;

TEST_CASE("cyclotomic polynomials and totients") {
    auto poly = [](int n) { return cyclotomic_polynomial(n); };
    CHECK(poly(1) == std::vector<Rational>{-1, 1});
    CHECK(poly(2) == std::vector<Rational>{1, 1});
    CHECK(poly(3) == std::vector<Rational>{1, 1, 1});
    CHECK(poly(4) == std::vector<Rational>{1, 0, 1});
    CHECK(poly(6) == std::vector<Rational>{1, -1, 1});
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(poly(12).size() == 5);
}

TEST_CASE("roots of unity satisfy their minimal polynomials") {
    CycNumber z3 = CycNumber::zeta_power(3, 1);
    CHECK((z3 * z3 + z3 + CycNumber::from_rational(1, 3)).is_zero());
    CycNumber z4 = CycNumber::zeta_power(4, 1);
    CHECK(z4 * z4 == CycNumber::from_rational(-1, 4));
    CycNumber z6 = CycNumber::zeta_power(6, 1);
    CHECK(z6.pow(3) == CycNumber::from_rational(-1, 6));
    CHECK(z6.pow(6).is_one());
    // order 2 is plain rationals
    CHECK(CycNumber::zeta_power(2, 1) == CycNumber::from_rational(-1, 2));
}

TEST_CASE("cyclotomic inverses") {
    for (int order : {3, 4, 5, 12}) {
        std::mt19937 rng(42 + order);
        std::uniform_int_distribution<int> d(-4, 4);
        for (int trial = 0; trial < 20; ++trial) {
            CycNumber a = CycNumber::from_rational(0, order);
            for (int k = 0; k < euler_phi(order); ++k)
                a = a + CycNumber::from_rational(d(rng), order) *
                            CycNumber::zeta_power(order, k);
            if (a.is_zero()) continue;
            CHECK((a * a.inverse()).is_one());
        }
    }
    CHECK(CycNumber::from_rational(Rational(3, 2)).inverse() ==
          CycNumber::from_rational(Rational(2, 3)));
    CHECK(CycNumber::zeta_power(5, 2).pow(-3) == CycNumber::zeta_power(5, -6));
}

TEST_CASE("scalar ring laws on random operands") {
    Ctx ctx = QContext::symbolic(3, 4);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-3, 3), expo(-2, 2);
    auto random_scalar = [&]() {
        Scalar s;
        for (int t = 0; t < 3; ++t) {
            QExp e(ctx->slots());
            for (auto& x : e) x = expo(rng);
            s += Scalar::term(e, CycNumber::from_rational(coeff(rng), 4) *
                                     CycNumber::zeta_power(4, coeff(rng)));
        }
        return s;
    };
    for (int trial = 0; trial < 30; ++trial) {
        Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("q parameters invert pairwise") {
    Ctx ctx = QContext::symbolic(3);
    CHECK((ctx->q_power(1, 2, 1) * ctx->q_power(2, 1, 1)).is_one());
    CHECK(ctx->q_power(2, 2, 5).is_one());
    CHECK(ctx->q_power(1, 3, 2) * ctx->q_power(1, 3, -2) == Scalar::one());
}

TEST_CASE("specialization is a ring homomorphism") {
    Ctx sym = QContext::symbolic(2, 3);
    Ctx spec = QContext::specialized(2, 3, {CycNumber::zeta_power(3, 1)});
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff(-3, 3), expo(-3, 3);
    auto random_scalar = [&]() {
        Scalar s;
        for (int t = 0; t < 3; ++t)
            s += Scalar::term(QExp{expo(rng)}, CycNumber::from_rational(coeff(rng), 3));
        return s;
    };
    for (int trial = 0; trial < 25; ++trial) {
        Scalar a = random_scalar(), b = random_scalar();
        CHECK(spec->specialize(a * b) == spec->specialize(a) * spec->specialize(b));
        CHECK(spec->specialize(a + b) == spec->specialize(a) + spec->specialize(b));
    }
    // zeta^3 = 1 collapses q12^3
    CHECK(spec->specialize(sym->q_power(1, 2, 3)).is_one());
}

TEST_CASE("unit inverse of one-term scalars") {
    Ctx ctx = QContext::symbolic(2, 4);
    Scalar s = ctx->q_power(1, 2, -3) * Scalar::from_cyc(CycNumber::zeta_power(4, 1));
    CHECK((s * s.inverse_unit()).is_one());
    Scalar sum = s + Scalar::one();
    CHECK_THROWS_AS(sum.inverse_unit(), std::domain_error);
}
