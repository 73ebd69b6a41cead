#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hlkappa/funcspace.hpp"

using namespace hlkappa;

namespace {
const Interval kUnit{Rational(0), Rational(1)};

PiecewisePolynomial tent_pp() {
    return PiecewisePolynomial(
        {Rational(0), Rational(1, 2), Rational(1)},
        {Polynomial({Rational(0), Rational(1)}), Polynomial({Rational(1), Rational(-1)})});
}
}

TEST_CASE("piecewise polynomial basics") {
    const PiecewisePolynomial t = tent_pp();
    CHECK(t.interval() == kUnit);
    CHECK(t.eval(Rational(1, 4)) == Rational(1, 4));
    CHECK(t.eval(Rational(3, 4)) == Rational(1, 4));
    // left piece wins at an interior breakpoint
    CHECK(t.piece_index(Rational(1, 2)) == 0);
    CHECK(t.eval(Rational(1, 2)) == Rational(1, 2));
    CHECK(t.integral() == Rational(1, 4));
    CHECK(t.integral(Rational(1, 4), Rational(3, 4)) == Rational(3, 16));
    CHECK(t.smoothness_class() == 0);  // continuous, kinked

    CHECK_THROWS_AS(PiecewisePolynomial({Rational(0), Rational(0)}, {Polynomial()}),
                    ParameterError);
    CHECK_THROWS_AS(PiecewisePolynomial({Rational(0), Rational(1)}, {}), ParameterError);
    CHECK_THROWS_AS(t.eval(Rational(2)), DomainError);
}

TEST_CASE("piecewise arithmetic merges partitions") {
    const PiecewisePolynomial t = tent_pp();
    const PiecewisePolynomial one(
        {Rational(0), Rational(1, 3), Rational(1)},
        {Polynomial::constant(Rational(1)), Polynomial::constant(Rational(1))});

    const PiecewisePolynomial sum = t + one;
    CHECK(sum.breakpoints().size() == 4);  // {0, 1/3, 1/2, 1}
    CHECK(sum.eval(Rational(1, 4)) == Rational(5, 4));

    const PiecewisePolynomial prod = t * t;
    CHECK(prod.eval(Rational(1, 4)) == Rational(1, 16));
    CHECK(prod.integral() == Rational(1, 12));  // 2 * int_0^(1/2) x^2

    const PiecewisePolynomial d = t.derivative();
    CHECK(d.eval(Rational(1, 4)) == Rational(1));
    CHECK(d.eval(Rational(3, 4)) == Rational(-1));

    const PiecewisePolynomial r = t.restrict(Rational(1, 4), Rational(3, 4));
    CHECK(r.interval() == Interval(Rational(1, 4), Rational(3, 4)));
    CHECK(r.eval(Rational(1, 2)) == Rational(1, 2));

    const auto merged = merge_breakpoints({Rational(0), Rational(1, 2), Rational(1)},
                                          {Rational(0), Rational(1, 3), Rational(1)});
    CHECK(merged == std::vector<Rational>{Rational(0), Rational(1, 3), Rational(1, 2), Rational(1)});
}

TEST_CASE("sine combinations and their derivatives") {
    TestFunctionSpec f;
    f.body = SineCombination{kUnit, {{Rational(1), 1}}};
    f.bc = BoundaryCondition::DirichletDirichlet;

    const double pi = std::numbers::pi;
    const Derivatives d = eval_derivatives(f, 0.5);
    CHECK(d.f == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d.f1 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(d.f2 == doctest::Approx(-pi * pi).epsilon(1e-14));

    // interval-aware phase: mode 2 on [1, 3] is sin(2 pi (x - 1) / 2)
    TestFunctionSpec g;
    const Interval iv13{Rational(1), Rational(3)};
    g.body = SineCombination{iv13, {{Rational(1, 2), 2}}};
    const Derivatives dg = eval_derivatives(g, 1.5);
    CHECK(dg.f == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(dg.f1 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(dg.f2 == doctest::Approx(-0.5 * pi * pi).epsilon(1e-14));

    CHECK_THROWS_AS(eval_derivatives(f, 1.5), DomainError);
}

TEST_CASE("admissibility checks the declared boundary condition") {
    TestFunctionSpec sine;
    sine.body = SineCombination{kUnit, {{Rational(1), 1}, {Rational(-1, 3), 4}}};
    sine.bc = BoundaryCondition::DirichletDirichlet;
    CHECK(check_admissible(sine, kUnit).pass);

    TestFunctionSpec half;
    half.body = HalfSineCombination{kUnit, {{Rational(1), 1}, {Rational(1, 5), 2}}};
    half.bc = BoundaryCondition::DirichletNeumann;
    CHECK(check_admissible(half, kUnit).pass);

    // half-sine terms do not vanish at b, so the DD declaration must fail
    half.bc = BoundaryCondition::DirichletDirichlet;
    const auto bad = check_admissible(half, kUnit);
    CHECK(!bad.pass);
    CHECK(!bad.first_violation.empty());

    // a mismatched interval is reported, never silently evaluated
    const auto mism = check_admissible(sine, Interval(Rational(0), Rational(2)));
    CHECK(!mism.pass);
    CHECK(!mism.first_violation.empty());

    // C2 piecewise body: x^2(1-x)^2 style quartic vanishing flatly at both ends
    TestFunctionSpec pp;
    pp.body = PiecewisePolynomial(
        {Rational(0), Rational(1)},
        {Polynomial({Rational(0), Rational(0), Rational(1), Rational(-2), Rational(1)})});
    pp.bc = BoundaryCondition::DirichletDirichlet;
    CHECK(check_admissible(pp, kUnit).pass);

    // tent: continuous but not C2 across the kink
    TestFunctionSpec kinked;
    kinked.body = tent_pp();
    kinked.bc = BoundaryCondition::DirichletDirichlet;
    CHECK(!check_admissible(kinked, kUnit).pass);
}

TEST_CASE("weight certification is exact") {
    // decreasing slopes: concave
    const WeightSpec pl = make_pl_weight({Rational(0), Rational(1, 2), Rational(1)},
                                         {Rational(0), Rational(1), Rational(3, 2)});
    CHECK(pl.concavity == Verdict::Certified);
    CHECK(pl.nonnegativity == Verdict::Certified);
    CHECK(pl.eval(0.25) == doctest::Approx(0.5));

    // increasing slopes: certified NOT concave, with the offending junction named
    const WeightSpec bad = make_pl_weight({Rational(0), Rational(1, 2), Rational(1)},
                                          {Rational(1), Rational(1), Rational(2)});
    CHECK(bad.concavity == Verdict::CertifiedNot);
    CHECK(!check_concave(bad).certificate.empty());

    const WeightSpec negative = make_pl_weight({Rational(0), Rational(1)},
                                               {Rational(1), Rational(-1)});
    CHECK(negative.nonnegativity == Verdict::CertifiedNot);

    const WeightSpec parab = make_poly_weight(
        kUnit, Polynomial({Rational(0), Rational(1), Rational(-1)}));  // x(1-x)
    CHECK(parab.concavity == Verdict::Certified);
    CHECK(parab.nonnegativity == Verdict::Certified);

    const WeightSpec x4 = make_poly_weight(kUnit, Polynomial::monomial(Rational(1), 4));
    CHECK(x4.concavity == Verdict::CertifiedNot);
    CHECK(x4.nonnegativity == Verdict::Certified);

    const WeightSpec c = make_constant_weight(kUnit, Rational(2));
    CHECK(c.concavity == Verdict::Certified);
    CHECK(check_nondecreasing(c).verdict == Verdict::Certified);

    CHECK(check_nondecreasing(pl).verdict == Verdict::Certified);
    CHECK(check_nondecreasing(make_pl_weight({Rational(0), Rational(1)},
                                             {Rational(1), Rational(0)}))
              .verdict == Verdict::CertifiedNot);

    CHECK(make_constant_weight(kUnit, Rational(-1)).nonnegativity == Verdict::CertifiedNot);
}

TEST_CASE("weight_as_pp agrees with the body") {
    const WeightSpec pl = make_pl_weight({Rational(0), Rational(1, 3), Rational(1)},
                                         {Rational(1, 2), Rational(1), Rational(1)});
    const PiecewisePolynomial pp = weight_as_pp(pl);
    for (int k = 0; k <= 6; ++k) {
        const Rational x(k, 6);
        CHECK(to_double(pp.eval(x)) == doctest::Approx(pl.eval(to_double(x))).epsilon(1e-15));
    }
    const WeightSpec poly = make_poly_weight(kUnit, Polynomial({Rational(0), Rational(1), Rational(-1)}));
    CHECK(weight_as_pp(poly).pieces().size() == 1);
    CHECK(weight_as_pp(poly).eval(Rational(1, 2)) == Rational(1, 4));
}

TEST_CASE("random generators are deterministic and certified") {
    const WeightSpec w1 = random_concave_weight(7, kUnit, 4);
    const WeightSpec w2 = random_concave_weight(7, kUnit, 4);
    const auto& b1 = std::get<PiecewiseLinearWeight>(w1.body);
    const auto& b2 = std::get<PiecewiseLinearWeight>(w2.body);
    CHECK(b1.breakpoints == b2.breakpoints);
    CHECK(b1.values == b2.values);
    CHECK(w1.concavity == Verdict::Certified);
    CHECK(w1.nonnegativity == Verdict::Certified);

    const WeightSpec w3 = random_concave_weight(8, kUnit, 4);
    CHECK(std::get<PiecewiseLinearWeight>(w3.body).values != b1.values);

    WeightGenOptions opts;
    opts.nondecreasing = true;
    for (std::uint64_t s = 0; s < 20; ++s) {
        const WeightSpec w = random_concave_weight(100 + s, kUnit, 3, opts);
        CHECK(check_nondecreasing(w).verdict == Verdict::Certified);
    }

    const TestFunctionSpec f = random_admissible_function(11, kUnit, 5);
    CHECK(check_admissible(f, kUnit).pass);
    CHECK(f.bc == BoundaryCondition::DirichletDirichlet);

    const TestFunctionSpec h = random_halfsine_function(12, kUnit, 4);
    CHECK(check_admissible(h, kUnit).pass);
    CHECK(h.bc == BoundaryCondition::DirichletNeumann);
}
