#include <doctest.h>

#include <cmath>

#include "hopfchar/bseries.hpp"
#include "hopfchar/ck.hpp"
#include "hopfchar/evolution.hpp"
#include "hopfchar/json_io.hpp"
#include "support/data_dir.hpp"

using namespace hopfchar;

namespace {

const AlgebraDescriptor kF = AlgebraDescriptor::float64();

double max_diff(const TruncatedFunctional& a, const TruncatedFunctional& b) {
    double mx = 0.0;
    for (const auto& be : a.instance()->basis_up_to(a.cutoff()))
        mx = std::max(mx, std::abs(a.value(be.id).f64() - b.value(be.id).f64()));
    return mx;
}

CurveSpec constant_delta(HopfPtr ck, const Degree& cut) {
    return CurveSpec(ck, cut, {{"[]", {Rational(1)}}});
}

}  // namespace

TEST_CASE("zero curve evolves to the unit exactly") {
    HopfPtr ck = make_ck();
    const CurveSpec zero(ck, Degree(5), std::map<std::string, std::vector<Rational>>{});
    const auto eta = evolve(zero, 1.0, 10);
    CHECK(eta.equals(unit_functional(ck, Degree(5), kF)));
    CHECK(evol_one(zero, 10).equals(unit_functional(ck, Degree(5), kF)));
}

TEST_CASE("constant curve converges to exp_star at order 4") {
    HopfPtr ck = make_ck();
    const Degree cut(5);
    const CurveSpec gamma = constant_delta(ck, cut);
    const auto ref = exp_star(delta_functional(ck, cut, kF));

    std::vector<double> errs;
    for (int steps : {10, 20, 40, 80}) errs.push_back(max_diff(evolve(gamma, 1.0, steps), ref));
    for (size_t i = 1; i < errs.size(); ++i) {
        const double slope = std::log2(errs[i - 1] / errs[i]);
        CHECK(slope > 3.7);
        CHECK(slope < 4.3);
    }
}

TEST_CASE("commuting time-dependent curve integrates to exp of the integral") {
    HopfPtr ck = make_ck();
    const Degree cut(5);
    const CurveSpec gamma(ck, cut, {{"[]", {Rational(0), Rational(1)}}});  // t * delta
    const auto eta = evolve(gamma, 1.0, 400);
    const auto ref = exp_star(delta_functional(ck, cut, kF).scaled(Rational(1, 2)));
    CHECK(max_diff(eta, ref) < 1e-9);
}

TEST_CASE("piecewise-constant curves give ordered products of exponentials") {
    HopfPtr ck = make_ck();
    const Degree cut(5);
    std::vector<CurveSpec::Segment> segs;
    segs.push_back({Rational(0), Rational(1, 2), {{"[]", {Rational(1)}}}});
    segs.push_back({Rational(1, 2), Rational(1), {{"[[]]", {Rational(1)}}}});
    const CurveSpec gamma(ck, cut, segs);

    const auto eta = evol_one(gamma, 400);

    TruncatedFunctional xh(ck, cut, kF), yh(ck, cut, kF);
    xh.set("[]", Scalar::of_double(0.5));
    yh.set("[[]]", Scalar::of_double(0.5));
    const auto ordered = convolve(exp_star(xh), exp_star(yh));
    CHECK(max_diff(eta, ordered) < 1e-8);

    // the unordered exponential differs by more than any tolerance in play
    const auto unordered = exp_star(xh.plus(yh));
    CHECK(max_diff(eta, unordered) > 1e-3);
}

TEST_CASE("outputs stay characters within the float tolerance") {
    HopfPtr ck = make_ck();
    const CurveSpec gamma = constant_delta(ck, Degree(5));
    for (double t1 : {0.25, 1.0}) CHECK(is_character(evolve(gamma, t1, 400), 1e-9));
}

TEST_CASE("truncation locality is exact") {
    HopfPtr ck = make_ck();
    const Degree cut(5);
    const CurveSpec gamma(ck, cut, {{"[]", {Rational(1)}}, {"[[]]", {Rational(1, 3)}}});
    // same curve with an extra generator above degree 3
    const CurveSpec noisy(ck, cut,
                          {{"[]", {Rational(1)}},
                           {"[[]]", {Rational(1, 3)}},
                           {"[[[],[]]]", {Rational(7, 2)}}});
    const auto a = evolve(gamma, 1.0, 50);
    const auto b = evolve(noisy, 1.0, 50);
    for (const auto& be : ck->basis_up_to(Degree(3)))
        CHECK(a.value(be.id).f64() == b.value(be.id).f64());
    // and the perturbation is visible above degree 3
    CHECK(max_diff(a, b) > 0.0);
}

TEST_CASE("curves must be infinitesimal-valued") {
    HopfPtr ck = make_ck();
    SUBCASE("value on a proper forest") {
        CHECK_THROWS_AS(CurveSpec(ck, Degree(4), {{"[].[]", {Rational(1)}}}),
                        std::invalid_argument);
    }
    SUBCASE("value on the empty forest") {
        CHECK_THROWS_AS(CurveSpec(ck, Degree(4), {{"1", {Rational(1)}}}),
                        std::invalid_argument);
    }
    SUBCASE("polynomial that is infinitesimal only at isolated times") {
        // gamma(t) = (t - 1/3) on a proper forest is zero at t = 1/3 but not
        // identically; the grid check must reject it.
        CHECK_THROWS_AS(
            CurveSpec(ck, Degree(4), {{"[].[]", {Rational(-1, 3), Rational(1)}}}),
            std::invalid_argument);
    }
}

TEST_CASE("evolve argument validation") {
    HopfPtr ck = make_ck();
    const CurveSpec gamma = constant_delta(ck, Degree(3));
    CHECK_THROWS_AS(evolve(gamma, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(evolve(gamma, 1.5, 10), std::invalid_argument);
    CHECK_THROWS_AS(CurveSpec(ck, Degree(3), std::vector<CurveSpec::Segment>{}),
                    std::invalid_argument);
}

TEST_CASE("shipped curve files load and integrate") {
    for (const char* name : {"zero", "const_delta", "linear_delta", "piecewise_xy"}) {
        CAPTURE(name);
        const CurveFile cf = curve_from_file(test_data_path("curves/" + std::string(name) +
                                                            ".json"));
        const auto eta = evolve(cf.curve, cf.t1, cf.steps);
        CHECK(is_character(eta, 1e-9));
    }
}

TEST_CASE("evol_one flow property against a manual splice") {
    HopfPtr ck = make_ck();
    const Degree cut(4);
    const CurveSpec gamma(ck, cut, {{"[]", {Rational(1, 2), Rational(1)}}});
    const auto full = evol_one(gamma, 200);  // internally checks the splice at s = 1/2
    const auto head = evolve(gamma, 0.5, 100);
    const auto tail = evolve(gamma.shifted(Rational(1, 2)), 0.5, 100);
    CHECK(max_diff(full, convolve(head, tail)) < 1e-9);
}
