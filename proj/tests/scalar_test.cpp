#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfrep/errors.hpp"
#include "hopfrep/scalar.hpp"
#include "testutil.hpp"

using namespace hopfrep;

TEST_CASE("addition basics") {
    LaurentScalar one(1);
    LaurentScalar minus_one(-1);
    CHECK((one + minus_one).is_zero());

    // 1 + q, the coefficient shape produced by squaring a skew-primitive.
    LaurentScalar q = LaurentScalar::q_power(1);
    LaurentScalar sum = q + one;
    CHECK(sum.terms().size() == 2);
    CHECK(sum.terms().at(0) == 1);
    CHECK(sum.terms().at(1) == 1);

    CHECK(LaurentScalar() + sum == sum);
}

TEST_CASE("multiplication basics") {
    LaurentScalar q = LaurentScalar::q_power(1);
    LaurentScalar qinv = LaurentScalar::q_power(-1);
    CHECK(q * qinv == LaurentScalar(1));
    CHECK(q * q == LaurentScalar::q_power(2));

    LaurentScalar one_plus_q = LaurentScalar(1) + q;
    LaurentScalar product = one_plus_q * qinv;  // q^-1 + 1
    CHECK(product == qinv + LaurentScalar(1));
}

TEST_CASE("evaluation") {
    LaurentScalar q = LaurentScalar::q_power(1);
    CHECK(q.eval(2) == 2);
    CHECK((LaurentScalar(1) + q).eval(3) == 4);
    CHECK(LaurentScalar::q_power(-1).eval(Rational(1, 2)) == 2);
    CHECK_THROWS_AS(LaurentScalar::q_power(-1).eval(0), ZeroEvaluationPoint);
    CHECK((LaurentScalar(3) + LaurentScalar::q_power(2)).eval(0) == 3);
}

TEST_CASE("rendering ascending with signs") {
    LaurentScalar s = LaurentScalar::q_power(-1, Rational(3, 2)) + LaurentScalar(1) +
                      LaurentScalar::q_power(2);
    CHECK(s.str() == "3/2*q^-1 + 1 + q^2");
    CHECK(LaurentScalar().str() == "0");
    CHECK((LaurentScalar(-1) + LaurentScalar::q_power(1, -1)).str() == "-1 - q");
    CHECK(LaurentScalar::q_power(-2, Rational(-5, 3)).str() == "-5/3*q^-2");
}

TEST_CASE("ring axioms on random scalars") {
    std::mt19937 rng(20140212);
    for (int i = 0; i < 300; ++i) {
        LaurentScalar a = testing::random_scalar(rng);
        LaurentScalar b = testing::random_scalar(rng);
        LaurentScalar c = testing::random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * LaurentScalar(1) == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(64);
    const Rational points[] = {Rational(2), Rational(3), Rational(1, 2), Rational(-1)};
    for (int i = 0; i < 200; ++i) {
        LaurentScalar a = testing::random_scalar(rng);
        LaurentScalar b = testing::random_scalar(rng);
        for (const Rational& q0 : points) {
            CHECK((a * b).eval(q0) == a.eval(q0) * b.eval(q0));
            CHECK((a + b).eval(q0) == a.eval(q0) + b.eval(q0));
        }
    }
}
