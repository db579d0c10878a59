#include <doctest.h>

#include "helpers.hpp"

using namespace fd;
using testutil::Rng;

TEST_CASE("conjugation fixes the real line and flips the imaginary part") {
    GaussianRational z(Rational(1), Rational(2));
    CHECK(z.conj() == GaussianRational(Rational(1), Rational(-2)));
    GaussianRational real(Rational(3, 2));
    CHECK(real.conj() == real);
}

TEST_CASE("conjugation is an involution and a ring automorphism") {
    Rng rng(1);
    for (int k = 0; k < 100; ++k) {
        GaussianRational x = testutil::random_scalar(rng);
        GaussianRational y = testutil::random_scalar(rng);
        CHECK(x.conj().conj() == x);
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK((x + y).conj() == x.conj() + y.conj());
    }
}

TEST_CASE("field axioms on random samples") {
    Rng rng(2);
    for (int k = 0; k < 100; ++k) {
        GaussianRational x = testutil::random_scalar(rng);
        GaussianRational y = testutil::random_scalar(rng);
        GaussianRational z = testutil::random_scalar(rng);
        CHECK((x + y) * z == x * z + y * z);
        if (!x.is_zero()) CHECK(x * x.inverse() == GaussianRational(1));
    }
}

TEST_CASE("norm is a nonnegative rational, zero only at zero") {
    Rng rng(3);
    for (int k = 0; k < 50; ++k) {
        GaussianRational z = testutil::random_scalar(rng);
        GaussianRational n = z * z.conj();
        CHECK(n.is_real());
        CHECK(n.re() >= 0);
        CHECK((n.re() == 0) == z.is_zero());
    }
}

TEST_CASE("scalar classification") {
    auto half = classify_scalar(GaussianRational(Rational(1, 2)));
    CHECK(half.in_dyadic_gaussian);
    CHECK(half.is_unit_of_dyadic_gaussian);
    CHECK(half.in_dyadic_rational);

    auto third = classify_scalar(GaussianRational(Rational(1, 3)));
    CHECK_FALSE(third.in_dyadic_gaussian);
    CHECK_FALSE(third.is_unit_of_dyadic_gaussian);
    CHECK_FALSE(third.in_dyadic_rational);

    // 4i is a unit: its inverse -i/4 lies in the ring
    GaussianRational four_i = GaussianRational(4) * GaussianRational::i();
    auto cls = classify_scalar(four_i);
    CHECK(cls.in_dyadic_gaussian);
    CHECK(cls.is_unit_of_dyadic_gaussian);
    CHECK_FALSE(cls.in_dyadic_rational);
    GaussianRational inv = four_i.inverse();
    CHECK(classify_scalar(inv).in_dyadic_gaussian);
    CHECK(four_i * inv == GaussianRational(1));
}

TEST_CASE("ring units beyond the power-of-two axis") {
    GaussianRational one_plus_i(Rational(1), Rational(1));
    CHECK(is_dyadic_gaussian_unit(one_plus_i));
    CHECK_FALSE(classify_scalar(one_plus_i).is_unit_of_dyadic_gaussian);
    CHECK_FALSE(is_dyadic_gaussian_unit(GaussianRational(3)));
    CHECK(is_dyadic_gaussian_unit(GaussianRational(Rational(0), Rational(1, 2))));
    CHECK_FALSE(is_dyadic_gaussian_unit(GaussianRational(0)));
    CHECK_FALSE(is_dyadic_gaussian_unit(GaussianRational(Rational(1, 3))));
}

TEST_CASE("powers with negative exponents") {
    GaussianRational z(Rational(1), Rational(1)); // 1 + i
    CHECK(z.pow(2) == GaussianRational(Rational(0), Rational(2)));
    CHECK(z.pow(0) == GaussianRational(1));
    CHECK(z.pow(-2) * z.pow(2) == GaussianRational(1));
    CHECK(z.pow(-3) == z.inverse().pow(3));
}

TEST_CASE("textual round trip") {
    Rng rng(4);
    for (int k = 0; k < 60; ++k) {
        GaussianRational z = testutil::random_scalar(rng);
        CHECK(GaussianRational::parse(z.str()) == z);
    }
    CHECK(GaussianRational::parse("3/2") == GaussianRational(Rational(3, 2)));
    CHECK(GaussianRational::parse("-1/3+2*i") == GaussianRational(Rational(-1, 3), Rational(2)));
    CHECK(GaussianRational::parse("i") == GaussianRational::i());
    CHECK(GaussianRational::parse("-i") == -GaussianRational::i());
    CHECK(GaussianRational::parse("2*i") == GaussianRational(Rational(0), Rational(2)));
    CHECK_THROWS_AS(GaussianRational::parse("1+"), Error);
    CHECK_THROWS_AS(GaussianRational::parse("x"), Error);
    CHECK_THROWS_AS(GaussianRational::parse(""), Error);
}

TEST_CASE("division and zero handling") {
    GaussianRational a(Rational(3), Rational(-2));
    GaussianRational b(Rational(0), Rational(5));
    CHECK(a / b * b == a);
    CHECK_THROWS_AS(a / GaussianRational(0), Error);
    CHECK_THROWS_AS(GaussianRational(0).inverse(), Error);
}
