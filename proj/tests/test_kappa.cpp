#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hlkappa/kappa.hpp"
#include "hlkappa/rng.hpp"

using namespace hlkappa;

namespace {
const Interval kUnit{Rational(0), Rational(1)};
constexpr double kPi = std::numbers::pi;

TestFunctionSpec sine_mode(const Interval& iv, int n, Rational lam = Rational(1)) {
    TestFunctionSpec f;
    f.body = SineCombination{iv, {{std::move(lam), n}}};
    f.bc = BoundaryCondition::DirichletDirichlet;
    return f;
}

TestFunctionSpec poly_bump() {
    TestFunctionSpec f;  // x(1-x), admissible Dirichlet-Dirichlet
    f.body = PiecewisePolynomial({Rational(0), Rational(1)},
                                 {Polynomial({Rational(0), Rational(1), Rational(-1)})});
    f.bc = BoundaryCondition::DirichletDirichlet;
    return f;
}

WeightSpec parabola_weight() {
    return make_poly_weight(kUnit, Polynomial({Rational(0), Rational(1), Rational(-1)}));
}
}

TEST_CASE("exact mode carries rationals end to end") {
    const auto r = compute_kappa(parabola_weight(), poly_bump(), kUnit);
    REQUIRE(r.mode == QuadMode::Exact);
    REQUIRE(r.kappa_exact.has_value());
    CHECK(*r.I0_exact == Rational(1, 140));
    CHECK(*r.I1_exact == Rational(1, 30));
    CHECK(*r.I2_exact == Rational(2, 3));
    CHECK(*r.kappa_exact == Rational(7, 30));
    CHECK(r.kappa == doctest::Approx(7.0 / 30.0).epsilon(1e-15));
    CHECK(r.error_bound == 0.0);

    const auto tv = verify_theorem(parabola_weight(), poly_bump(), kUnit);
    CHECK(tv.pass);
    CHECK(tv.slack == 0.0);  // exact route: no tolerance needed
}

TEST_CASE("trig route matches adaptive cross-check and honors force_exact") {
    const WeightSpec w = make_pl_weight({Rational(0), Rational(1, 2), Rational(1)},
                                        {Rational(1, 2), Rational(1), Rational(1, 4)});
    const TestFunctionSpec f = sine_mode(kUnit, 2, Rational(3, 4));

    const auto r = compute_kappa(w, f, kUnit);
    CHECK(r.mode == QuadMode::Adaptive);
    CHECK(r.error_bound > 0.0);
    CHECK(r.error_bound < 1e-10);
    CHECK(!r.kappa_exact.has_value());

    // cross-check every integral against panel quadrature
    AdaptiveOptions opts;
    opts.tol = 1e-13;
    opts.breakpoints = {0.5};
    const auto i0 = integrate_adaptive(
        [&](double x) {
            const Derivatives d = eval_derivatives(f, x);
            return w.eval(x) * d.f * d.f;
        },
        kUnit, opts);
    const auto i1 = integrate_adaptive(
        [&](double x) {
            const Derivatives d = eval_derivatives(f, x);
            return w.eval(x) * d.f1 * d.f1;
        },
        kUnit, opts);
    const auto i2 = integrate_adaptive(
        [&](double x) {
            const Derivatives d = eval_derivatives(f, x);
            return w.eval(x) * d.f2 * d.f2;
        },
        kUnit, opts);
    CHECK(r.I0 == doctest::Approx(i0.value).epsilon(1e-11));
    CHECK(r.I1 == doctest::Approx(i1.value).epsilon(1e-11));
    CHECK(r.I2 == doctest::Approx(i2.value).epsilon(1e-11));

    ComputeOptions force;
    force.force_exact = true;
    CHECK_THROWS_AS(compute_kappa(w, f, kUnit, force), ModeError);
}

TEST_CASE("theorem verification guards its hypotheses") {
    const TestFunctionSpec f = sine_mode(kUnit, 1);

    const WeightSpec convex = make_poly_weight(kUnit, Polynomial::monomial(Rational(1), 4));
    CHECK_THROWS_AS(verify_theorem(convex, f, kUnit), HypothesisError);

    TestFunctionSpec dn;
    dn.body = HalfSineCombination{kUnit, {{Rational(1), 1}}};
    dn.bc = BoundaryCondition::DirichletNeumann;
    const WeightSpec w = make_pl_weight({Rational(0), Rational(1)}, {Rational(0), Rational(1)});
    CHECK_THROWS_AS(verify_theorem(w, dn, kUnit), HypothesisError);

    // interval mismatch is a parameter error
    CHECK_THROWS_AS(compute_kappa(w, sine_mode(Interval(Rational(0), Rational(2)), 1), kUnit),
                    ParameterError);

    // the zero function leaves the quotient undefined
    CHECK_THROWS_AS(compute_kappa(w, sine_mode(kUnit, 1, Rational(0)), kUnit), DegenerateError);

    // explicit slack is honored
    const auto tv = verify_theorem(w, f, kUnit, 0.5);
    CHECK(tv.slack == 0.5);
    CHECK(tv.pass);
}

TEST_CASE("equality cases give kappa = 1 as a literal rational") {
    // tent weight is the n = 2 equality case
    const EqualityCase tent =
        make_equality_case(kUnit, 2, Rational(1),
                           {Rational(0), Rational(1, 2), Rational(0)});
    const EqualityExact ex = equality_kappa_exact(tent);
    CHECK(ex.kappa == Rational(1));
    CHECK(ex.half_mass == Rational(1, 8));
    CHECK(ex.I0.pi_exp == 0);
    CHECK(ex.I0.r == Rational(1, 8));
    CHECK(ex.I1.pi_exp == 2);
    CHECK(ex.I1.r == Rational(1, 2));  // I0 * (2 pi / 1)^2 / pi^2
    CHECK(ex.I2.pi_exp == 4);
    CHECK(ex.I2.r == Rational(2));

    // the scaled, shifted, multi-segment version is no different
    const Interval iv{Rational(-1), Rational(2)};
    const EqualityCase ec = make_equality_case(
        iv, 3, Rational(-5, 3),
        {Rational(1), Rational(2), Rational(5, 2), Rational(11, 4)});
    CHECK(equality_kappa_exact(ec).kappa == Rational(1));
    CHECK(ec.weight.concavity == Verdict::Certified);

    // and the double route agrees to roundoff
    const auto r = compute_kappa(ec.weight, ec.function, iv);
    CHECK(r.kappa == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("equality case constructor rejects bad data") {
    CHECK_THROWS_AS(make_equality_case(kUnit, 0, Rational(1), {Rational(1)}), ParameterError);
    CHECK_THROWS_AS(
        make_equality_case(kUnit, 2, Rational(0), {Rational(0), Rational(1), Rational(0)}),
        DegenerateError);
    CHECK_THROWS_AS(make_equality_case(kUnit, 2, Rational(1), {Rational(0), Rational(1)}),
                    ParameterError);
    CHECK_THROWS_AS(
        make_equality_case(kUnit, 2, Rational(1), {Rational(1), Rational(-1), Rational(1)}),
        HypothesisError);
    // increasing slopes break concavity
    CHECK_THROWS_AS(
        make_equality_case(kUnit, 2, Rational(1), {Rational(0), Rational(1), Rational(3)}),
        HypothesisError);
    CHECK_THROWS_AS(
        make_equality_case(kUnit, 1, Rational(1), {Rational(0), Rational(0)}),
        DegenerateError);
}

TEST_CASE("breaking linearity strictly lowers kappa") {
    const EqualityCase ec = make_equality_case(
        kUnit, 3, Rational(2),
        {Rational(0), Rational(2, 3), Rational(1), Rational(5, 6)});
    for (int k = 0; k < 3; ++k) {
        const WeightSpec pw = perturb_equality_weight(ec, k);
        CHECK(pw.concavity == Verdict::Certified);
        CHECK(pw.nonnegativity == Verdict::Certified);
        const auto r = compute_kappa(pw, ec.function, kUnit);
        CHECK(r.kappa < 1.0 - 1e-6);
    }

    // an epsilon too large to keep concavity is rejected
    CHECK_THROWS_AS(perturb_equality_weight(ec, 1, Rational(100)), ParameterError);
}

TEST_CASE("even reflection maps the corollary onto the theorem") {
    // w = x with f = sin(pi x / 2): reflects to the tent against the first
    // sine mode on [0, 2]; kappa ~ 0.1791 on both paths (the tent is not
    // linear, so this is not an equality case)
    const WeightSpec w = make_pl_weight({Rational(0), Rational(1)}, {Rational(0), Rational(1)});
    TestFunctionSpec f;
    f.body = HalfSineCombination{kUnit, {{Rational(1), 1}}};
    f.bc = BoundaryCondition::DirichletNeumann;

    const Reflection refl = reflect_even(w, f, kUnit);
    CHECK(refl.iv == Interval(Rational(0), Rational(2)));
    const auto& rw = std::get<PiecewiseLinearWeight>(refl.weight.body);
    CHECK(rw.breakpoints == std::vector<Rational>{Rational(0), Rational(1), Rational(2)});
    CHECK(rw.values == std::vector<Rational>{Rational(0), Rational(1), Rational(0)});
    const auto& rf = std::get<SineCombination>(refl.function.body);
    REQUIRE(rf.terms.size() == 1);
    CHECK(rf.terms[0].second == 1);  // half-mode j = 1 -> full mode 2j - 1 = 1
    CHECK(refl.function.bc == BoundaryCondition::DirichletDirichlet);

    const double direct = compute_kappa(w, f, kUnit).kappa;
    const auto tv = verify_theorem(refl.weight, refl.function, refl.iv);
    CHECK(tv.pass);
    CHECK(direct == doctest::Approx(tv.report.kappa).epsilon(1e-12));
    const double expect = std::pow((kPi * kPi - 4.0) / (kPi * kPi + 4.0), 2);
    CHECK(direct == doctest::Approx(expect).epsilon(1e-12));

    // higher half-modes map to odd full modes
    TestFunctionSpec multi;
    multi.body = HalfSineCombination{kUnit, {{Rational(1), 1}, {Rational(-1, 2), 3}}};
    multi.bc = BoundaryCondition::DirichletNeumann;
    const Reflection r2 = reflect_even(w, multi, kUnit);
    const auto& t2 = std::get<SineCombination>(r2.function.body).terms;
    REQUIRE(t2.size() == 2);
    CHECK(t2[0].second == 1);
    CHECK(t2[1].second == 5);

    // decreasing weights violate the corollary hypothesis
    const WeightSpec dec = make_pl_weight({Rational(0), Rational(1)}, {Rational(1), Rational(0)});
    CHECK_THROWS_AS(reflect_even(dec, f, kUnit), HypothesisError);

    // Dirichlet-Dirichlet input is the wrong shape to reflect
    CHECK_THROWS_AS(reflect_even(w, sine_mode(kUnit, 1), kUnit), HypothesisError);
}

TEST_CASE("reflection of a polynomial weight mirrors exactly") {
    const WeightSpec w = make_poly_weight(
        kUnit, Polynomial({Rational(0), Rational(1), Rational(-1, 2)}));  // x - x^2/2, nondecreasing
    TestFunctionSpec f;
    f.body = HalfSineCombination{kUnit, {{Rational(1), 2}}};
    f.bc = BoundaryCondition::DirichletNeumann;
    const Reflection refl = reflect_even(w, f, kUnit);
    const PiecewisePolynomial pp = weight_as_pp(refl.weight);
    for (int k = 1; k <= 5; ++k) {
        const Rational s(k, 6);
        CHECK(pp.eval(Rational(1) + s) == pp.eval(Rational(1) - s));
    }
    const double direct = compute_kappa(w, f, kUnit).kappa;
    const double doubled = compute_kappa(refl.weight, refl.function, refl.iv).kappa;
    CHECK(direct == doctest::Approx(doubled).epsilon(1e-12));
}

TEST_CASE("proof identities vanish where they should") {
    const TestFunctionSpec f = sine_mode(kUnit, 1);

    // w = x(1-x): both sides of the parts identity equal -1
    CHECK(parts_identity_residual(parabola_weight(), f, kUnit) <= 1e-12);
    const double i0_flat = compute_kappa(make_constant_weight(kUnit, Rational(1)), f, kUnit).I0;
    CHECK(-2.0 * i0_flat == doctest::Approx(-1.0).epsilon(1e-13));  // int w'' f^2
    const auto rw = compute_kappa(parabola_weight(), f, kUnit);
    const double mid = middle_integral(parabola_weight(), f, kUnit);
    CHECK(2.0 * (rw.I1 - mid) == doctest::Approx(-1.0).epsilon(1e-12));  // 2 int w (f f'' + f'^2)

    // piecewise-linear weights have distributional w''
    const WeightSpec pl = make_pl_weight({Rational(0), Rational(1)}, {Rational(0), Rational(1)});
    CHECK_THROWS_AS(parts_identity_residual(pl, f, kUnit), ModeError);

    // lemma 4 on w = x: both sides are -2/pi sized
    CHECK(lemma4_residual(pl, f, kUnit) <= 1e-12);
    const double side = integral_poly_cos(Polynomial::monomial(Rational(1), 1), kPi, 0.0, 0.0, 1.0);
    CHECK(kPi * side == doctest::Approx(-2.0 / kPi).epsilon(1e-13));

    // smooth weights are outside lemma 4's piecewise-linear contract
    CHECK_THROWS_AS(lemma4_residual(parabola_weight(), f, kUnit), ModeError);

    // random instances
    for (std::uint64_t s = 0; s < 25; ++s) {
        const WeightSpec w = random_concave_weight(mix_seed(500, s), kUnit, 3);
        const TestFunctionSpec g = random_admissible_function(mix_seed(501, s), kUnit, 4);
        CHECK(lemma4_residual(w, g, kUnit) <= 1e-9);
    }
}

TEST_CASE("epsilon-split equivalence is decided exactly") {
    const auto good = epsilon_equivalence_check(1.0, 2.0, 5.0, {0.25, 1.0, 2.0});
    CHECK(good.b2_le_ac);
    CHECK(good.consistent);
    CHECK(good.grid_results.size() == 4);  // eps* = B/(2A) appended
    for (const auto& [eps, holds] : good.grid_results) CHECK(holds);

    const auto tight = epsilon_equivalence_check(1.0, 3.0, 5.0, {0.25, 1.0, 4.0});
    CHECK(!tight.b2_le_ac);
    CHECK(tight.consistent);  // the appended eps* = 3/2 witnesses the failure
    bool any_fail = false;
    for (const auto& [eps, holds] : tight.grid_results) any_fail = any_fail || !holds;
    CHECK(any_fail);

    CHECK_THROWS_AS(epsilon_equivalence_check(0.0, 1.0, 1.0, {1.0}), ParameterError);
    CHECK_THROWS_AS(epsilon_equivalence_check(1.0, 1.0, 1.0, {-1.0}), ParameterError);
}

TEST_CASE("the proof chain orders the three quantities") {
    for (std::uint64_t s = 0; s < 25; ++s) {
        const WeightSpec w = random_concave_weight(mix_seed(600, s), kUnit, 4);
        const TestFunctionSpec f = random_admissible_function(mix_seed(601, s), kUnit, 4);
        const auto r = compute_kappa(w, f, kUnit);
        const double mid = middle_integral(w, f, kUnit);
        const double tol = 1e-9 * std::max({1.0, std::abs(r.I1), std::abs(mid)});
        CHECK(r.I1 <= mid + tol);
        CHECK(mid <= std::sqrt(r.I0 * r.I2) + tol);
    }
}

TEST_CASE("kappa is invariant under scaling and dilation") {
    const WeightSpec w = random_concave_weight(77, kUnit, 3);
    const TestFunctionSpec f = random_admissible_function(78, kUnit, 3);
    const double base = compute_kappa(w, f, kUnit).kappa;

    for (const Rational& lam : {Rational(-3), Rational(1, 7), Rational(10)}) {
        auto body = std::get<SineCombination>(f.body);
        for (auto& t : body.terms) t.first *= lam;
        TestFunctionSpec fs;
        fs.body = body;
        fs.bc = f.bc;
        CHECK(compute_kappa(w, fs, kUnit).kappa ==
              doctest::Approx(base).epsilon(1e-12));

        auto wb = std::get<PiecewiseLinearWeight>(w.body);
        for (auto& v : wb.values) v *= rat_abs(lam);
        const WeightSpec ws = make_pl_weight(wb.breakpoints, wb.values);
        CHECK(compute_kappa(ws, f, kUnit).kappa ==
              doctest::Approx(base).epsilon(1e-12));
    }

    // same shape transplanted onto [2, 5]
    const Interval iv25{Rational(2), Rational(5)};
    const auto& wb = std::get<PiecewiseLinearWeight>(w.body);
    std::vector<Rational> mapped;
    for (const auto& b : wb.breakpoints) mapped.push_back(Rational(2) + 3 * b);
    const WeightSpec wd = make_pl_weight(mapped, wb.values);
    TestFunctionSpec fd;
    fd.body = SineCombination{iv25, std::get<SineCombination>(f.body).terms};
    fd.bc = f.bc;
    const double dil = compute_kappa(wd, fd, iv25).kappa;
    CHECK(dil == doctest::Approx(base).epsilon(1e-10));
}

TEST_CASE("sweep is clean, deterministic, and hashable") {
    SweepOptions opts;
    const SweepReport a = sweep(42, 60, kUnit, opts);
    const SweepReport b = sweep(42, 60, kUnit, opts);
    REQUIRE(a.entries.size() == 60);
    CHECK(a.count == 60);
    CHECK(a.failures == 0);
    CHECK(a.max_kappa <= 1.0 + 1e-9);
    CHECK(a.closest_to_one.size() == 10);
    for (size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].pass);
        CHECK(a.entries[i].chain_ok);
        CHECK(a.entries[i].kappa == b.entries[i].kappa);
        CHECK(a.entries[i].weight_hash == b.entries[i].weight_hash);
        CHECK(a.entries[i].function_hash == b.entries[i].function_hash);
    }
    // the ten recorded indices really are the closest to one
    double worst_kept = 0.0;
    for (int idx : a.closest_to_one)
        worst_kept = std::max(worst_kept,
                              std::abs(a.entries[static_cast<size_t>(idx)].kappa - 1.0));
    int closer = 0;
    for (const auto& e : a.entries)
        if (std::abs(e.kappa - 1.0) < worst_kept) ++closer;
    CHECK(closer <= 10);

    const SweepReport c = sweep(43, 10, kUnit, opts);
    CHECK(c.entries[0].weight_hash != a.entries[0].weight_hash);
}

TEST_CASE("canonical hashes separate specs") {
    const WeightSpec w1 = make_pl_weight({Rational(0), Rational(1)}, {Rational(0), Rational(1)});
    const WeightSpec w2 = make_pl_weight({Rational(0), Rational(1)}, {Rational(0), Rational(1)});
    const WeightSpec w3 = make_pl_weight({Rational(0), Rational(1)}, {Rational(0), Rational(2)});
    CHECK(weight_hash(w1) == weight_hash(w2));
    CHECK(weight_hash(w1) != weight_hash(w3));

    const TestFunctionSpec f1 = sine_mode(kUnit, 1);
    const TestFunctionSpec f2 = sine_mode(kUnit, 2);
    CHECK(function_hash(f1) == function_hash(sine_mode(kUnit, 1)));
    CHECK(function_hash(f1) != function_hash(f2));
}
