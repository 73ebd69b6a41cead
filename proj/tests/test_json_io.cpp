#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "hlkappa/json_io.hpp"

using namespace hlkappa;

namespace {
const Interval kUnit{Rational(0), Rational(1)};
}

TEST_CASE("rationals parse from strings, integers, and dyadic floats") {
    CHECK(rational_from_json(Json("3/4"), "x") == Rational(3, 4));
    CHECK(rational_from_json(Json("-7"), "x") == Rational(-7));
    CHECK(rational_from_json(Json(5), "x") == Rational(5));
    CHECK(rational_from_json(Json(0.25), "x") == Rational(1, 4));  // dyadic, exact
    CHECK(rational_to_json(Rational(22, 8)) == Json("11/4"));
    CHECK(rational_to_json(Rational(-3)) == Json("-3"));
    CHECK_THROWS_AS(rational_from_json(Json("abc"), "x"), ConfigError);
    CHECK_THROWS_AS(rational_from_json(Json("1/0"), "x"), ConfigError);
    CHECK_THROWS_AS(rational_from_json(Json(true), "x"), ConfigError);
}

TEST_CASE("every weight kind round-trips through json") {
    const std::vector<WeightSpec> weights = {
        make_constant_weight(kUnit, Rational(3, 4)),
        make_pl_weight({Rational(0), Rational(1, 2), Rational(1)},
                       {Rational(0), Rational(1, 2), Rational(0)}),
        make_poly_weight(kUnit, Polynomial({Rational(0), Rational(1), Rational(-1)})),
        make_pp_weight(PiecewisePolynomial(
            {Rational(0), Rational(1, 2), Rational(1)},
            {Polynomial({Rational(0), Rational(1)}), Polynomial({Rational(1, 2)})})),
    };
    for (const auto& w : weights) {
        const Json j = weight_to_json(w);
        const WeightSpec back = weight_from_json(j, kUnit);
        CHECK(weight_hash(back) == weight_hash(w));
        CHECK(back.concavity == w.concavity);
        CHECK(back.nonnegativity == w.nonnegativity);
        CHECK(weight_to_json(back) == j);
    }
}

TEST_CASE("every function kind round-trips through json") {
    TestFunctionSpec sine;
    sine.body = SineCombination{kUnit, {{Rational(1), 1}, {Rational(-1, 3), 4}}};
    sine.bc = BoundaryCondition::DirichletDirichlet;

    TestFunctionSpec half;
    half.body = HalfSineCombination{kUnit, {{Rational(2, 5), 2}}};
    half.bc = BoundaryCondition::DirichletNeumann;

    TestFunctionSpec pp;
    pp.body = PiecewisePolynomial({Rational(0), Rational(1)},
                                  {Polynomial({Rational(0), Rational(1), Rational(-1)})});
    pp.bc = BoundaryCondition::DirichletDirichlet;

    for (const auto& f : {sine, half, pp}) {
        const Json j = function_to_json(f);
        const TestFunctionSpec back = function_from_json(j, kUnit);
        CHECK(function_hash(back) == function_hash(f));
        CHECK(back.bc == f.bc);
        CHECK(function_to_json(back) == j);
    }
}

TEST_CASE("instances parse and unknown or missing keys are fatal") {
    const Json good = Json::parse(R"({
        "interval": ["0", "1"],
        "weight": {"kind": "constant", "value": "1"},
        "function": {"kind": "sine", "terms": [{"lambda": "1", "mode": 1}]}
    })");
    const InstanceConfig cfg = instance_from_json(good);
    CHECK(cfg.iv == kUnit);
    CHECK(cfg.weight.concavity == Verdict::Certified);
    CHECK(std::holds_alternative<SineCombination>(cfg.function.body));
    CHECK(cfg.function.bc == BoundaryCondition::DirichletDirichlet);  // default

    Json extra = good;
    extra["extra_key"] = 1;
    CHECK_THROWS_AS(instance_from_json(extra), ConfigError);

    Json missing = good;
    missing.erase("weight");
    CHECK_THROWS_AS(instance_from_json(missing), ConfigError);

    Json bad_kind = good;
    bad_kind["weight"]["kind"] = "gaussian";
    CHECK_THROWS_AS(instance_from_json(bad_kind), ConfigError);

    Json bad_brk = good;
    bad_brk["weight"] = Json::parse(
        R"({"kind": "piecewise_linear", "breakpoints": ["0", "0"], "values": ["1", "1"]})");
    CHECK_THROWS_AS(instance_from_json(bad_brk), ConfigError);

    Json bad_bc = good;
    bad_bc["function"]["bc"] = "neumann_neumann";
    CHECK_THROWS_AS(instance_from_json(bad_bc), ConfigError);

    // piecewise bodies must span the declared interval exactly
    Json span = good;
    span["interval"] = Json::array({"0", "2"});
    span["weight"] = Json::parse(
        R"({"kind": "piecewise_linear", "breakpoints": ["0", "1"], "values": ["1", "1"]})");
    CHECK_THROWS_AS(instance_from_json(span), ConfigError);
}

TEST_CASE("reports carry exact fields only on the exact path") {
    const InstanceConfig cfg = instance_from_json(Json::parse(R"({
        "interval": ["0", "1"],
        "weight": {"kind": "polynomial", "coefficients": ["0", "1", "-1"]},
        "function": {"kind": "piecewise_polynomial",
                     "breakpoints": ["0", "1"],
                     "pieces": [["0", "1", "-1"]]}
    })"));
    const auto exact = compute_kappa(cfg.weight, cfg.function, cfg.iv);
    const Json je = kappa_report_to_json(exact);
    CHECK(je.at("mode") == "exact");
    CHECK(je.at("kappa_rational") == "7/30");
    CHECK(je.at("I0_rational") == "1/140");
    CHECK(je.at("error_bound") == 0.0);

    TestFunctionSpec sine;
    sine.body = SineCombination{kUnit, {{Rational(1), 1}}};
    sine.bc = BoundaryCondition::DirichletDirichlet;
    const auto adaptive = compute_kappa(cfg.weight, sine, kUnit);
    const Json ja = kappa_report_to_json(adaptive);
    CHECK(ja.at("mode") == "adaptive");
    CHECK(!ja.contains("kappa_rational"));
    CHECK(ja.at("error_bound").get<double>() > 0.0);
}

TEST_CASE("envelope dumps are deterministic and newline terminated") {
    const Json body = {{"pass", true}, {"kappa", 0.25}};
    const Json cfg = {{"seed", 42}};
    const std::string a = dump_json(report_envelope("verify", cfg, body));
    const std::string b = dump_json(report_envelope("verify", cfg, body));
    CHECK(a == b);
    CHECK(a.back() == '\n');
    CHECK(a.find("\"version\"") != std::string::npos);
    CHECK(a.find("\"subcommand\"") != std::string::npos);
    // sorted keys: "config" precedes "report"
    CHECK(a.find("\"config\"") < a.find("\"report\""));
}

TEST_CASE("csv writers emit stable headers and one row per entry") {
    const SweepReport sw = sweep(42, 5, kUnit, {});
    const std::string csv = sweep_report_to_csv(sw);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "index,kappa,I0,I1,I2,weight_hash,function_hash");
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 5);

    const auto wr = witness_study({Rational(1, 4), Rational(1, 10)});
    const std::string wcsv = witness_results_to_csv(wr);
    std::istringstream win(wcsv);
    std::getline(win, line);
    CHECK(line ==
          "delta,a0,a1,a2,a3,a4,a5,kappa_exact,kappa_exact_decimal,"
          "kappa_closed_form,match,delta_times_kappa");
    rows = 0;
    while (std::getline(win, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 2);
    CHECK(wcsv.find("1185963245618/217307830103") != std::string::npos);
}

TEST_CASE("search reports sample the best function on 257 points") {
    const QuadraticForms forms =
        assemble_forms(make_constant_weight(kUnit, Rational(1)), kUnit, 8);
    SearchOptions opts;
    opts.max_iter = 50;
    opts.grad_tol = 1e-6;
    const SearchResult res = maximize_kappa(forms, 7, opts);
    const Json j = search_result_to_json(forms, res);
    CHECK(j.at("basis_size") == 8);
    CHECK(j.at("coefficients").size() == 8);
    const auto& xs = j.at("samples").at("x");
    const auto& fs = j.at("samples").at("f");
    CHECK(xs.size() == 257);
    CHECK(fs.size() == 257);
    CHECK(xs.at(0).get<double>() == 0.0);
    CHECK(xs.at(256).get<double>() == 1.0);
    CHECK(std::abs(fs.at(0).get<double>()) < 1e-12);  // Dirichlet ends
    CHECK(std::abs(fs.at(256).get<double>()) < 1e-12);
}

TEST_CASE("format_double round-trips") {
    for (double x : {0.1, 1.0 / 3.0, 2.5e-13, -7.25, 1e300}) {
        const std::string s = format_double(x);
        CHECK(std::stod(s) == x);
    }
    CHECK(format_double(0.25) == "0.25");
}
