#include <doctest.h>

#include "hopfchar/bseries.hpp"
#include "hopfchar/ck.hpp"
#include "hopfchar/sampling.hpp"

using namespace hopfchar;

namespace {

const AlgebraDescriptor kQ = AlgebraDescriptor::rational();

Scalar q(long n, long d = 1) { return Scalar::of_rational(Rational(n, d)); }

// delta^{*n}(h) through the iterated coproduct: the number of ways to split h
// into n single-node legs. Independent of the exp_star implementation.
Rational delta_power_via_legs(const HopfInstance& H, const std::string& id, int n) {
    Rational acc(0);
    for (const auto& term : H.iterated_coproduct(id, n - 1)) {
        bool all_dots = true;
        for (const auto& leg : term.legs) all_dots = all_dots && leg == "[]";
        if (all_dots) acc += term.coeff;
    }
    return acc;
}

}  // namespace

TEST_CASE("convolution basics") {
    HopfPtr ck = make_ck();
    const Degree cut(4);
    Rng rng(1);
    const TruncatedFunctional unit = unit_functional(ck, cut, kQ);

    SUBCASE("unit is the convolution identity") {
        const TruncatedFunctional phi = random_functional(ck, cut, rng);
        CHECK(convolve(unit, phi).equals(phi));
        CHECK(convolve(phi, unit).equals(phi));
        CHECK(convolve(unit, unit).equals(unit));
    }
    SUBCASE("unit functional support is the empty forest only") {
        REQUIRE(unit.entries().size() == 1);
        CHECK(unit.entries().begin()->first == "1");
        CHECK(is_character(unit));
        CHECK_FALSE(is_infinitesimal(unit));
    }
    SUBCASE("character convolution on small trees") {
        const TruncatedFunctional a = random_ck_character(ck, cut, rng);
        const TruncatedFunctional b = random_ck_character(ck, cut, rng);
        const TruncatedFunctional ab = convolve(a, b);
        CHECK(ab.value("[]").equals(a.value("[]") + b.value("[]")));
        CHECK(ab.value("[[]]").equals(a.value("[[]]") + a.value("[]") * b.value("[]") +
                                      b.value("[[]]")));
    }
    SUBCASE("associativity on random triples, exact") {
        for (int i = 0; i < 3; ++i) {
            const auto x = random_functional(ck, Degree(6), rng);
            const auto y = random_functional(ck, Degree(6), rng);
            const auto z = random_functional(ck, Degree(6), rng);
            CHECK(convolve(convolve(x, y), z).equals(convolve(x, convolve(y, z))));
        }
    }
    SUBCASE("mismatched cutoffs are rejected") {
        const TruncatedFunctional other = unit_functional(ck, Degree(3), kQ);
        CHECK_THROWS_AS(convolve(unit, other), std::invalid_argument);
    }
}

TEST_CASE("character and infinitesimal predicates") {
    HopfPtr ck = make_ck();
    const Degree cut(4);
    TruncatedFunctional delta = delta_functional(ck, cut, kQ);
    CHECK(is_infinitesimal(delta));
    CHECK_FALSE(is_character(delta));  // delta(1) = 0 != 1

    Rng rng(2);
    CHECK(is_character(random_ck_character(ck, cut, rng)));
    CHECK(is_infinitesimal(random_ck_infinitesimal(ck, cut, rng)));

    // supported on a proper forest: neither
    TruncatedFunctional f(ck, cut, kQ);
    f.set("[].[]", q(1));
    CHECK_FALSE(is_infinitesimal(f));
    CHECK_FALSE(is_character(f));
}

TEST_CASE("char_inverse is phi o S") {
    HopfPtr ck = make_ck();
    const Degree cut(6);
    const TruncatedFunctional unit = unit_functional(ck, cut, kQ);
    CHECK(char_inverse(unit).equals(unit));

    Rng rng(3);
    const TruncatedFunctional a = random_ck_character(ck, cut, rng);
    const TruncatedFunctional inv = char_inverse(a);
    CHECK(inv.value("[]").equals(-a.value("[]")));
    CHECK(convolve(a, inv).equals(unit));
    CHECK(convolve(inv, a).equals(unit));
    REQUIRE(unit_inverse(a));
    CHECK(unit_inverse(a)->equals(inv));

    CHECK_THROWS_AS(char_inverse(delta_functional(ck, cut, kQ)), std::invalid_argument);
}

TEST_CASE("unit_inverse by triangular recursion") {
    HopfPtr ck = make_ck();
    const Degree cut(4);
    const TruncatedFunctional unit = unit_functional(ck, cut, kQ);
    CHECK(unit_inverse(unit)->equals(unit));

    SUBCASE("unit + delta inverts to the alternating geometric series") {
        const TruncatedFunctional phi =
            unit.plus(delta_functional(ck, cut, kQ));
        const auto inv = unit_inverse(phi);
        REQUIRE(inv);
        CHECK(convolve(phi, *inv).equals(unit));
        CHECK(convolve(*inv, phi).equals(unit));
        // (unit + delta)^{-1} = sum (-delta)^{*n}: values frozen from the
        // leg-count oracle: -1 on the node, +delta^{*2}/1 on the chain,
        // -delta^{*3} = -2 on the cherry.
        CHECK(inv->value("[]").equals(q(-1)));
        CHECK(inv->value("[[]]").equals(q(1)));
        CHECK(inv->value("[[],[]]").equals(q(-2)));
    }
    SUBCASE("singular degree-0 part") {
        TruncatedFunctional phi(ck, cut, kQ);
        phi.set("[]", q(5));  // phi(1) = 0
        CHECK_FALSE(unit_inverse(phi));
    }
    SUBCASE("geometric-series agreement on unit + nilpotent samples") {
        Rng rng(4);
        TruncatedFunctional nil(ck, cut, kQ);
        for (const auto& be : ck->basis_up_to(cut))
            if (be.degree > 0) nil.set(be.id, Scalar::of_rational(random_rational(rng)));
        const TruncatedFunctional phi = unit.plus(nil);
        TruncatedFunctional series = unit;
        TruncatedFunctional pw = nil;
        for (int n = 1; n <= 4; ++n) {
            series = series.plus(pw.scaled(Rational((n % 2) ? -1 : 1)));
            pw = convolve(pw, nil);
        }
        CHECK(unit_inverse(phi)->equals(series));
    }
}

TEST_CASE("exp_star") {
    HopfPtr ck = make_ck();
    const Degree cut(6);
    const TruncatedFunctional unit = unit_functional(ck, cut, kQ);
    const TruncatedFunctional delta = delta_functional(ck, cut, kQ);

    SUBCASE("exp(0) is the unit") {
        CHECK(exp_star(TruncatedFunctional(ck, cut, kQ)).equals(unit));
    }
    SUBCASE("values on small trees against the leg-count oracle") {
        const TruncatedFunctional e = exp_star(delta);
        for (const char* id : {"[]", "[[]]", "[[],[]]", "[[[]]]"}) {
            Rational expect = std::string(id) == "[]" ? Rational(1) : Rational(0);
            Rational fact(1);
            for (int n = 2; n <= 6; ++n) {
                fact *= n;
                expect += delta_power_via_legs(*ck, id, n) / fact;
            }
            CHECK(e.value(id).rat() == expect);
        }
        CHECK(e.value("[]").rat() == Rational(1));
        CHECK(e.value("[[]]").rat() == Rational(1, 2));
        CHECK(e.value("[[],[]]").rat() == Rational(1, 3));
        CHECK(e.value("[[[]]]").rat() == Rational(1, 6));
    }
    SUBCASE("rejects non-vanishing degree-0 part") {
        CHECK_THROWS_AS(exp_star(unit), std::invalid_argument);
    }
    SUBCASE("works over the truncated-poly coefficient algebra") {
        const auto dp = AlgebraDescriptor::truncated_poly(3);
        TruncatedFunctional phi(ck, Degree(4), dp);
        phi.set("[]", Scalar::of_poly({Rational(0), Rational(1), Rational(0)}));
        const TruncatedFunctional e = exp_star(phi);
        CHECK(is_character(e));
        CHECK(log_star(e).equals(phi));
        // e(2-chain) = x^2/2
        CHECK(e.value("[[]]").equals(
            Scalar::of_poly({Rational(0), Rational(0), Rational(1, 2)})));
    }
}

TEST_CASE("log_star and the exponential bijection") {
    HopfPtr ck = make_ck();
    const Degree cut(5);
    const TruncatedFunctional unit = unit_functional(ck, cut, kQ);
    CHECK(log_star(unit).entries().empty());

    Rng rng(6);
    SUBCASE("log(exp(delta)) = delta at cutoff 6") {
        const auto d6 = delta_functional(ck, Degree(6), kQ);
        CHECK(log_star(exp_star(d6)).equals(d6));
    }
    SUBCASE("round trips and predicate exchange") {
        for (int i = 0; i < 10; ++i) {
            const auto x = random_ck_infinitesimal(ck, cut, rng);
            const auto e = exp_star(x);
            CHECK(is_character(e));
            CHECK(log_star(e).equals(x));

            const auto a = random_ck_character(ck, cut, rng);
            const auto l = log_star(a);
            CHECK(is_infinitesimal(l));
            CHECK(exp_star(l).equals(a));
        }
    }
    SUBCASE("rejects wrong degree-0 part") {
        CHECK_THROWS_AS(log_star(delta_functional(ck, cut, kQ)), std::invalid_argument);
    }
}

TEST_CASE("bracket") {
    HopfPtr ck = make_ck();
    const Degree cut(4);
    Rng rng(8);
    const auto x = random_functional(ck, cut, rng);
    const auto y = random_functional(ck, cut, rng);
    const auto z = random_functional(ck, cut, rng);
    const TruncatedFunctional zero(ck, cut, kQ);

    CHECK(bracket(x, x).equals(zero));
    CHECK(bracket(x, y).equals(bracket(y, x).scaled(Rational(-1))));
    // Jacobi
    const auto j1 = bracket(x, bracket(y, z));
    const auto j2 = bracket(y, bracket(z, x));
    const auto j3 = bracket(z, bracket(x, y));
    CHECK(j1.plus(j2).plus(j3).equals(zero));
    // infinitesimal characters are closed under the bracket
    for (int i = 0; i < 5; ++i) {
        const auto a = random_ck_infinitesimal(ck, cut, rng);
        const auto b = random_ck_infinitesimal(ck, cut, rng);
        CHECK(is_infinitesimal(bracket(a, b)));
    }
}

TEST_CASE("bch") {
    HopfPtr ck = make_ck();
    const Degree cut(4);
    Rng rng(9);
    const auto x = random_ck_infinitesimal(ck, cut, rng);
    const TruncatedFunctional zero(ck, cut, kQ);

    SUBCASE("bch(x, 0) = x") { CHECK(bch(x, zero).equals(x)); }
    SUBCASE("commuting inputs add") {
        TruncatedFunctional a(ck, cut, kQ), b(ck, cut, kQ);
        a.set("[]", q(2, 3));
        b.set("[]", q(-1, 2));
        CHECK(bch(a, b).equals(a.plus(b)));
    }
    SUBCASE("degree <= 2 truncation is H1 + H2") {
        TruncatedFunctional a(ck, cut, kQ), b(ck, cut, kQ);
        a.set("[]", q(1));
        b.set("[[]]", q(1));
        const auto lhs = bch(a, b);
        const auto h12 = a.plus(b).plus(bracket(a, b).scaled(Rational(1, 2)));
        const auto diff = lhs.minus(h12);
        for (const auto& be : ck->basis_up_to(cut))
            if (be.degree < 3) CHECK(diff.value(be.id).is_zero());
        // and on random infinitesimal pairs
        for (int i = 0; i < 5; ++i) {
            const auto u = random_ck_infinitesimal(ck, cut, rng);
            const auto v = random_ck_infinitesimal(ck, cut, rng);
            const auto d2 =
                bch(u, v).minus(u.plus(v).plus(bracket(u, v).scaled(Rational(1, 2))));
            CHECK(d2.truncated(Degree(2)).entries().empty());
        }
    }
    SUBCASE("rejects non-infinitesimal inputs") {
        CHECK_THROWS_AS(bch(unit_functional(ck, cut, kQ), zero), std::invalid_argument);
    }
}

TEST_CASE("classify certifies the strongest flag") {
    HopfPtr ck = make_ck();
    const Degree cut(4);
    Rng rng(12);
    CHECK(classify(unit_functional(ck, cut, kQ)) == CharacterFlag::character);
    CHECK(classify(random_ck_character(ck, cut, rng)) == CharacterFlag::character);
    CHECK(classify(delta_functional(ck, cut, kQ)) == CharacterFlag::infinitesimal);
    // invertible but neither character nor infinitesimal
    TruncatedFunctional phi = unit_functional(ck, cut, kQ);
    phi.set("[].[]", q(3));
    CHECK(classify(phi) == CharacterFlag::unit_group_element);
    // phi(1) = 0 and not infinitesimal
    TruncatedFunctional gen(ck, cut, kQ);
    gen.set("[].[]", q(3));
    CHECK(classify(gen) == CharacterFlag::general);
    CHECK(to_string(classify(gen)) == "general");
}

TEST_CASE("group axioms on characters at cutoff") {
    HopfPtr ck = make_ck();
    const Degree cut(5);
    Rng rng(10);
    const TruncatedFunctional unit = unit_functional(ck, cut, kQ);
    for (int i = 0; i < 5; ++i) {
        const auto a = random_ck_character(ck, cut, rng);
        const auto b = random_ck_character(ck, cut, rng);
        CHECK(is_character(convolve(a, b)));
        CHECK(convolve(a, char_inverse(a)).equals(unit));
    }
}
