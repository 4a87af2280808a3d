#include <doctest.h>

#include "hopfchar/sampling.hpp"
#include "hopfchar/scalar.hpp"

using namespace hopfchar;

namespace {

Scalar poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return Scalar::of_poly(std::move(c));
}

Scalar random_scalar(const AlgebraDescriptor& d, Rng& rng) {
    switch (d.kind) {
        case AlgebraKind::rational: return Scalar::of_rational(random_rational(rng));
        case AlgebraKind::float64: {
            std::uniform_real_distribution<double> u(-2.0, 2.0);
            return Scalar::of_double(u(rng));
        }
        case AlgebraKind::truncated_poly: {
            std::vector<Rational> c;
            for (int i = 0; i < d.poly_order; ++i) c.push_back(random_rational(rng));
            return Scalar::of_poly(std::move(c));
        }
    }
    throw std::logic_error("bad kind");
}

}  // namespace

TEST_CASE("ring axioms hold exactly for the exact kinds") {
    Rng rng(7);
    for (const auto& d :
         {AlgebraDescriptor::rational(), AlgebraDescriptor::truncated_poly(4)}) {
        const Scalar zero = Scalar::zero(d), one = Scalar::one(d);
        for (int i = 0; i < 200; ++i) {
            const Scalar a = random_scalar(d, rng), b = random_scalar(d, rng),
                         c = random_scalar(d, rng);
            CHECK((a + b).equals(b + a));
            CHECK((a * b).equals(b * a));
            CHECK(((a + b) + c).equals(a + (b + c)));
            CHECK(((a * b) * c).equals(a * (b * c)));
            CHECK((a * (b + c)).equals(a * b + a * c));
            CHECK((a + zero).equals(a));
            CHECK((a * one).equals(a));
            CHECK((a - a).is_zero());
        }
    }
}

TEST_CASE("truncated-poly multiplication discards degree >= m") {
    // (x + x^2)(x^2) = x^3 mod x^4; everything above x^3 vanishes
    const Scalar a = poly({0, 1, 1, 0});
    const Scalar b = poly({0, 0, 1, 0});
    CHECK((a * b).equals(poly({0, 0, 0, 1})));
    // nilpotency of x at the truncation order
    const Scalar x = poly({0, 1, 0, 0});
    CHECK((x * x * x * x).is_zero());
}

TEST_CASE("scalar_invert") {
    SUBCASE("identity") {
        const Scalar one = Scalar::one(AlgebraDescriptor::rational());
        REQUIRE(scalar_invert(one));
        CHECK(scalar_invert(one)->equals(one));
    }
    SUBCASE("1 + x in K[x]/(x^3)") {
        const Scalar a = poly({1, 1, 0});
        const auto inv = scalar_invert(a);
        REQUIRE(inv);
        CHECK(inv->equals(poly({1, -1, 1})));
        CHECK((a * *inv).equals(Scalar::one(a.descriptor())));
        CHECK((*inv * a).equals(Scalar::one(a.descriptor())));
    }
    SUBCASE("zero is not invertible") {
        CHECK_FALSE(scalar_invert(Scalar::of_rational(Rational(0))));
        CHECK_FALSE(scalar_invert(Scalar::of_double(0.0)));
        CHECK_FALSE(scalar_invert(poly({0, 3, 1})));  // zero constant term
    }
    SUBCASE("two-sided on random invertibles") {
        Rng rng(11);
        const auto d = AlgebraDescriptor::truncated_poly(5);
        for (int i = 0; i < 100; ++i) {
            Scalar a = random_scalar(d, rng);
            const auto inv = scalar_invert(a);
            if (!inv) continue;
            CHECK((a * *inv).equals(Scalar::one(d)));
            CHECK((*inv * a).equals(Scalar::one(d)));
        }
    }
}

TEST_CASE("scalar_norm values") {
    CHECK(*scalar_norm(Scalar::of_rational(Rational(-3, 2)), AlgebraDescriptor::rational()) ==
          Rational(3, 2));
    CHECK(*scalar_norm(Scalar::of_double(-0.25), AlgebraDescriptor::float64()) ==
          Rational(1, 4));
    // Registered truncated-poly norm is m * max|coeff|: the plain max-abs is
    // not submultiplicative ((1+x)^2 = 1+2x mod x^2 has max-abs 2 > 1*1).
    CHECK(*scalar_norm(poly({2, 5}), AlgebraDescriptor::truncated_poly(2)) == Rational(10));
    CHECK_FALSE(scalar_norm(Scalar::of_rational(Rational(1)),
                            AlgebraDescriptor::rational(/*with_norm=*/false)));
}

TEST_CASE("norm submultiplicativity on 1000 samples per kind") {
    for (const auto& d : {AlgebraDescriptor::rational(), AlgebraDescriptor::float64(),
                          AlgebraDescriptor::truncated_poly(3)}) {
        Rng rng(5);
        // float64 products are rounded; the estimate holds up to one ulp
        const Rational slack = d.kind == AlgebraKind::float64
                                   ? Rational(1) + Rational(1, 1LL << 50)
                                   : Rational(1);
        for (int i = 0; i < 1000; ++i) {
            const Scalar a = random_scalar(d, rng), b = random_scalar(d, rng);
            CHECK(*scalar_norm(a * b, d) <=
                  *scalar_norm(a, d) * *scalar_norm(b, d) * slack);
        }
    }
}

TEST_CASE("algebra mismatch is an error") {
    CHECK_THROWS_AS(Scalar::of_rational(Rational(1)) + Scalar::of_double(1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(poly({1, 0}) * poly({1, 0, 0}), std::invalid_argument);
}

TEST_CASE("float comparisons use the relative tolerance") {
    const Scalar a = Scalar::of_double(1.0);
    const Scalar b = Scalar::of_double(1.0 + 1e-12);
    CHECK(a.approx_equals(b, 1e-9));
    CHECK_FALSE(a.approx_equals(Scalar::of_double(1.0 + 1e-6), 1e-9));
    // exact kinds stay exact regardless of tolerance
    CHECK_FALSE(Scalar::of_rational(Rational(1)).approx_equals(
        Scalar::of_rational(Rational(1) + Rational(1, 1000000)), 1e-3));
}
