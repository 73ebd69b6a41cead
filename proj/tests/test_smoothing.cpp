#include <doctest.h>

#include <cmath>

#include "hlkappa/kappa.hpp"
#include "hlkappa/smoothing.hpp"

using namespace hlkappa;

namespace {
SmoothingSchedule tent_schedule(int levels) {
    SmoothingSchedule s;
    s.target = make_pl_weight({Rational(0), Rational(1, 2), Rational(1)},
                              {Rational(0), Rational(1, 2), Rational(0)});
    s.levels = levels;
    return s;
}
}

TEST_CASE("mollifying a line reproduces it exactly") {
    SmoothingSchedule s;
    s.target = make_pl_weight({Rational(0), Rational(1)}, {Rational(0), Rational(1)});
    s.levels = 2;
    const WeightSpec sm = smooth_concave(s, 1);
    const PiecewisePolynomial pp = weight_as_pp(sm);
    CHECK(pp.eval(Rational(1, 3)) == Rational(1, 3));
    CHECK(pp.eval(Rational(0)) == Rational(0));
    CHECK(pp.eval(Rational(7, 8)) == Rational(7, 8));

    SmoothingSchedule c;
    c.target = make_constant_weight(Interval(Rational(0), Rational(2)), Rational(3, 4));
    c.levels = 1;
    const PiecewisePolynomial cp = weight_as_pp(smooth_concave(c, 1));
    CHECK(cp.eval(Rational(1, 5)) == Rational(3, 4));
    CHECK(cp.eval(Rational(2)) == Rational(3, 4));
}

TEST_CASE("smoothed tents are certified C2 concave weights") {
    const SmoothingSchedule s = tent_schedule(3);
    for (int n = 1; n <= 3; ++n) {
        const WeightSpec sm = smooth_concave(s, n);
        CHECK(sm.concavity == Verdict::Certified);
        CHECK(sm.nonnegativity == Verdict::Certified);
        const PiecewisePolynomial pp = weight_as_pp(sm);
        CHECK(pp.smoothness_class() >= 2);
        for (const auto& piece : pp.pieces()) CHECK(piece.degree() <= 8);
        // mass is preserved away from the shrinking kink neighborhood,
        // so the integrals converge to the tent's 1/4
        const double mass = to_double(pp.integral());
        CHECK(std::abs(mass - 0.25) < 0.01);
    }
}

TEST_CASE("sup distance at the kink is 35 h / 128 and halves per level") {
    const SmoothingSchedule s = tent_schedule(5);
    const auto entries = smoothing_convergence(s);
    REQUIRE(entries.size() == 5);
    for (int n = 1; n <= 5; ++n) {
        const auto& e = entries[static_cast<size_t>(n - 1)];
        CHECK(e.level == n);
        const double h = 1.0 / (8.0 * std::pow(2.0, n));
        CHECK(e.sup_distance == doctest::Approx(35.0 * h / 128.0).epsilon(1e-12));
        CHECK(e.grid_error_bound < e.sup_distance);
    }
    for (size_t i = 1; i < entries.size(); ++i)
        CHECK(entries[i].sup_distance / entries[i - 1].sup_distance ==
              doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("smoothed equality weight keeps kappa near one") {
    // the tent is the two-segment equality weight for sin(2 pi x); the C2
    // approximants must stay admissible for the theorem and keep the
    // quotient within O(h) of one
    const SmoothingSchedule s = tent_schedule(6);
    TestFunctionSpec f;
    f.body = SineCombination{Interval(Rational(0), Rational(1)), {{Rational(1), 2}}};
    f.bc = BoundaryCondition::DirichletDirichlet;

    double prev_gap = 1.0;
    for (int n = 2; n <= 6; n += 2) {
        const WeightSpec sm = smooth_concave(s, n);
        const auto tv = verify_theorem(sm, f, Interval(Rational(0), Rational(1)));
        CHECK(tv.pass);
        const double gap = 1.0 - tv.report.kappa;
        CHECK(gap > 0.0);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 1e-3);
}

TEST_CASE("schedule validation") {
    SmoothingSchedule s = tent_schedule(2);
    CHECK_THROWS_AS(smooth_concave(s, 0), ParameterError);
    CHECK_THROWS_AS(smooth_concave(s, 3), ParameterError);
    CHECK_THROWS_AS(s.halfwidth(0), ParameterError);
    CHECK(s.halfwidth(2) == Rational(1, 32));

    s.levels = 0;
    CHECK_THROWS_AS(smoothing_convergence(s), ParameterError);

    SmoothingSchedule bad = tent_schedule(1);
    bad.target = make_pl_weight({Rational(0), Rational(1, 2), Rational(1)},
                                {Rational(0), Rational(1, 4), Rational(1)});
    CHECK_THROWS_AS(smooth_concave(bad, 1), HypothesisError);

    SmoothingSchedule poly = tent_schedule(1);
    poly.target = make_poly_weight(Interval(Rational(0), Rational(1)),
                                   Polynomial({Rational(0), Rational(1), Rational(-1)}));
    CHECK_THROWS_AS(smooth_concave(poly, 1), ModeError);
}
