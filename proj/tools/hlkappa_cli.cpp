// hlkappa: weighted HELP-inequality toolkit.
//
// Subcommands map one-to-one onto the library modules: kappa (quotient on a
// configured instance), verify (theorem check: one instance or a seeded
// sweep), equality (the extremal family), reflect (corollary path via even
// reflection), witness (the convex-weight counterexample study),
// monotonicity (the decreasing-weight example), smooth (mollification
// convergence), search (Galerkin ascent), identities (proof-identity
// residuals).
//
// Exit codes: 0 success, 1 verification failure, 2 usage/config error.
// Reports are deterministic: same config and seed give byte-identical
// output. No timestamps, no environment state.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hlkappa/json_io.hpp"
#include "hlkappa/rng.hpp"
#include "hlkappa/version.hpp"

namespace {

using namespace hlkappa;

std::string single_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

Json load_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ConfigError("config parse error: " + single_line(e.what()));
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw ConfigError("cannot open output file: " + out_path);
    os << text;
}

struct Options {
    std::string config;
    std::string out;
    std::string format = "json";
    std::uint64_t seed = 42;
    int count = -1;    // -1: per-subcommand default
    std::string deltas;
    int basis_size = 24;
    double tol = -1;   // -1: per-subcommand default
    bool exact = false;
};

double tol_or(const Options& o, double dflt) { return o.tol > 0 ? o.tol : dflt; }
int count_or(const Options& o, int dflt) { return o.count >= 0 ? o.count : dflt; }

void require_json_format(const Options& o, const std::string& sub) {
    if (o.format != "json")
        throw ConfigError(sub + " only writes json (csv is for verify and witness)");
}

std::vector<Rational> parse_delta_list(const std::string& s) {
    std::vector<Rational> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        std::string tok = s.substr(pos, comma - pos);
        if (tok.empty()) throw ConfigError("--deltas: empty entry in list");
        try {
            out.push_back(parse_rational(tok));
        } catch (const std::exception& e) {
            throw ConfigError("--deltas: " + single_line(e.what()));
        }
        pos = comma + 1;
    }
    if (out.empty()) throw ConfigError("--deltas: empty list");
    return out;
}

// ---------------------------------------------------------------------------

int run_kappa(const Options& o) {
    require_json_format(o, "kappa");
    if (o.config.empty()) throw ConfigError("kappa requires --config");
    InstanceConfig cfg = instance_from_json(load_json(o.config));

    ComputeOptions co;
    co.tol = tol_or(o, 1e-11);
    co.force_exact = o.exact;
    KappaReport r = compute_kappa(cfg.weight, cfg.function, cfg.iv, co);

    Json resolved = instance_to_json(cfg);
    resolved["tol"] = co.tol;
    resolved["exact"] = co.force_exact;
    emit(dump_json(report_envelope("kappa", resolved, kappa_report_to_json(r))), o.out);
    return 0;
}

int run_verify(const Options& o) {
    if (!o.config.empty()) {
        require_json_format(o, "verify --config");
        InstanceConfig cfg = instance_from_json(load_json(o.config));
        ComputeOptions co;
        co.force_exact = o.exact;
        std::optional<double> slack;
        if (o.tol > 0) slack = o.tol;
        TheoremVerdict tv = verify_theorem(cfg.weight, cfg.function, cfg.iv, slack, co);

        Json resolved = instance_to_json(cfg);
        resolved["slack"] = tv.slack;
        resolved["exact"] = co.force_exact;
        Json body;
        body["pass"] = tv.pass;
        body["slack"] = tv.slack;
        body["kappa"] = kappa_report_to_json(tv.report);
        emit(dump_json(report_envelope("verify", resolved, body)), o.out);
        return tv.pass ? 0 : 1;
    }

    const int count = count_or(o, 1000);
    SweepOptions so;
    so.chain_tol = tol_or(o, 1e-9);
    const Interval iv(Rational(0), Rational(1));
    SweepReport rep = sweep(o.seed, count, iv, so);

    bool chain_all = true;
    for (const auto& e : rep.entries) chain_all = chain_all && e.chain_ok;
    const bool ok = rep.failures == 0 && chain_all;

    if (o.format == "csv") {
        emit(sweep_report_to_csv(rep), o.out);
        return ok ? 0 : 1;
    }
    Json resolved;
    resolved["interval"] = Json::array({"0", "1"});
    resolved["seed"] = std::to_string(o.seed);
    resolved["count"] = count;
    resolved["chain_tol"] = so.chain_tol;
    emit(dump_json(report_envelope("verify", resolved, sweep_report_to_json(rep))), o.out);
    return ok ? 0 : 1;
}

// concave node values on the n-grid: strictly decreasing increments,
// shifted so the minimum lands slightly above zero
std::vector<Rational> random_equality_nodes(std::uint64_t seed, int n) {
    Rng rng(seed);
    std::vector<Rational> inc(static_cast<size_t>(n));
    inc[0] = rng.uniform_rational(Rational(1, 2), Rational(3, 2));
    for (int i = 1; i < n; ++i)
        inc[static_cast<size_t>(i)] = inc[static_cast<size_t>(i - 1)] -
                                      rng.uniform_rational(Rational(1, 8), Rational(1, 2));
    std::vector<Rational> vals{Rational(0)};
    for (const auto& d : inc) vals.push_back(vals.back() + d);
    Rational mn = *std::min_element(vals.begin(), vals.end());
    Rational offset = rng.uniform_rational(Rational(1, 100), Rational(1, 2));
    for (auto& v : vals) v = v - mn + offset;
    return vals;
}

int run_equality(const Options& o) {
    require_json_format(o, "equality");

    struct Case {
        EqualityCase ec;
        int perturb_segment;
    };
    std::vector<Case> cases;
    Json resolved;

    if (!o.config.empty()) {
        Json j = load_json(o.config);
        if (!j.is_object()) throw ConfigError("config must be a JSON object");
        for (const auto& [key, value] : j.items()) {
            (void)value;
            if (key != "interval" && key != "n" && key != "lambda" && key != "node_values" &&
                key != "perturb_segment")
                throw ConfigError("unknown key '" + key + "' in config");
        }
        for (const char* k : {"interval", "n", "lambda", "node_values"})
            if (!j.contains(k)) throw ConfigError(std::string("config is missing '") + k + "'");
        const Json& ivj = j.at("interval");
        if (!ivj.is_array() || ivj.size() != 2)
            throw ConfigError("config.interval must be a two-element array");
        Interval iv(rational_from_json(ivj[0], "interval[0]"),
                    rational_from_json(ivj[1], "interval[1]"));
        if (!j.at("n").is_number_integer()) throw ConfigError("config.n must be an integer");
        const int n = j.at("n").get<int>();
        const Rational lambda = rational_from_json(j.at("lambda"), "lambda");
        std::vector<Rational> nodes;
        for (size_t i = 0; i < j.at("node_values").size(); ++i)
            nodes.push_back(
                rational_from_json(j.at("node_values")[i], "node_values[" + std::to_string(i) + "]"));
        int seg = 0;
        if (j.contains("perturb_segment")) {
            if (!j.at("perturb_segment").is_number_integer())
                throw ConfigError("config.perturb_segment must be an integer");
            seg = j.at("perturb_segment").get<int>();
        }
        cases.push_back({make_equality_case(iv, n, lambda, nodes), seg});
        resolved = j;
        resolved["perturb_segment"] = seg;
    } else {
        const int count = count_or(o, 10);
        if (count < 1) throw ConfigError("--count must be positive");
        const Interval iv(Rational(0), Rational(1));
        for (int i = 0; i < count; ++i) {
            const int n = 1 + i % 3;
            Rng rng(mix_seed(o.seed, static_cast<std::uint64_t>(i)));
            Rational lambda = rng.uniform_rational(Rational(1, 2), Rational(2));
            if (rng.uniform01() < 0.5) lambda = -lambda;
            auto nodes = random_equality_nodes(mix_seed(o.seed, 1000 + i), n);
            cases.push_back({make_equality_case(iv, n, lambda, nodes), i % n});
        }
        resolved["interval"] = Json::array({"0", "1"});
        resolved["seed"] = std::to_string(o.seed);
        resolved["count"] = count;
    }

    bool all_ok = true;
    Json rows = Json::array();
    for (const auto& [ec, seg] : cases) {
        EqualityExact ex = equality_kappa_exact(ec);
        WeightSpec perturbed = perturb_equality_weight(ec, seg);
        KappaReport pr = compute_kappa(perturbed, ec.function, ec.iv);
        const bool ok = ex.kappa == 1 && pr.kappa < 1.0;
        all_ok = all_ok && ok;

        Json row;
        row["n"] = ec.n;
        row["lambda"] = rat_to_string(ec.lambda);
        row["weight"] = weight_to_json(ec.weight);
        row["kappa_rational"] = rat_to_string(ex.kappa);
        row["kappa"] = to_double(ex.kappa);
        row["half_mass"] = rat_to_string(ex.half_mass);
        row["perturb_segment"] = seg;
        row["perturbed_kappa"] = pr.kappa;
        row["pass"] = ok;
        rows.push_back(std::move(row));
    }
    Json body;
    body["cases"] = std::move(rows);
    body["pass"] = all_ok;
    emit(dump_json(report_envelope("equality", resolved, body)), o.out);
    return all_ok ? 0 : 1;
}

int run_reflect(const Options& o) {
    require_json_format(o, "reflect");
    if (o.config.empty()) throw ConfigError("reflect requires --config");
    InstanceConfig cfg = instance_from_json(load_json(o.config));

    Reflection refl = reflect_even(cfg.weight, cfg.function, cfg.iv);
    KappaReport direct = compute_kappa(cfg.weight, cfg.function, cfg.iv);
    TheoremVerdict tv = verify_theorem(refl.weight, refl.function, refl.iv);

    const double tol = tol_or(o, 1e-9);
    const double diff = std::abs(direct.kappa - tv.report.kappa);
    const bool agree = diff <= tol * std::max(1.0, std::abs(direct.kappa));
    const bool ok = tv.pass && agree;

    Json resolved = instance_to_json(cfg);
    resolved["tol"] = tol;
    Json body;
    body["direct"] = kappa_report_to_json(direct);
    body["reflected"] = kappa_report_to_json(tv.report);
    body["reflected_interval"] =
        Json::array({rat_to_string(refl.iv.a), rat_to_string(refl.iv.b)});
    body["reflected_weight"] = weight_to_json(refl.weight);
    body["reflected_function"] = function_to_json(refl.function);
    body["theorem_pass"] = tv.pass;
    body["slack"] = tv.slack;
    body["path_difference"] = diff;
    body["agree"] = agree;
    body["pass"] = ok;
    emit(dump_json(report_envelope("reflect", resolved, body)), o.out);
    return ok ? 0 : 1;
}

int run_witness(const Options& o) {
    std::vector<Rational> deltas =
        o.deltas.empty() ? default_witness_deltas() : parse_delta_list(o.deltas);
    std::vector<WitnessResult> rs = witness_study(deltas);
    bool all_match = true;
    for (const auto& r : rs) all_match = all_match && r.match;

    if (o.format == "csv") {
        emit(witness_results_to_csv(rs), o.out);
        return all_match ? 0 : 1;
    }
    Json resolved;
    Json dj = Json::array();
    for (const auto& d : deltas) dj.push_back(rat_to_string(d));
    resolved["deltas"] = std::move(dj);
    Json body;
    body["results"] = witness_results_to_json(rs);
    body["limit_constant"] = rat_to_string(kappa_limit_constant());
    body["limit_constant_decimal"] = to_double(kappa_limit_constant());
    body["all_match"] = all_match;
    emit(dump_json(report_envelope("witness", resolved, body)), o.out);
    return all_match ? 0 : 1;
}

int run_monotonicity(const Options& o) {
    require_json_format(o, "monotonicity");
    KappaReport r = monotonicity_example();

    // the fixed instance, serialized for provenance
    InstanceConfig cfg;
    cfg.iv = Interval(Rational(0), Rational(1));
    cfg.weight = make_pl_weight({Rational(0), Rational(1)}, {Rational(1), Rational(0)});
    TestFunctionSpec f;
    f.body = HalfSineCombination{cfg.iv, {{Rational(1), 1}}};
    f.bc = BoundaryCondition::DirichletNeumann;
    cfg.function = f;

    emit(dump_json(report_envelope("monotonicity", instance_to_json(cfg),
                                   kappa_report_to_json(r))),
         o.out);
    return 0;
}

int run_smooth(const Options& o) {
    require_json_format(o, "smooth");
    SmoothingSchedule sched;
    Json resolved;
    if (!o.config.empty()) {
        Json j = load_json(o.config);
        if (!j.is_object()) throw ConfigError("config must be a JSON object");
        for (const auto& [key, value] : j.items()) {
            (void)value;
            if (key != "interval" && key != "target" && key != "levels")
                throw ConfigError("unknown key '" + key + "' in config");
        }
        for (const char* k : {"interval", "target"})
            if (!j.contains(k)) throw ConfigError(std::string("config is missing '") + k + "'");
        const Json& ivj = j.at("interval");
        if (!ivj.is_array() || ivj.size() != 2)
            throw ConfigError("config.interval must be a two-element array");
        Interval iv(rational_from_json(ivj[0], "interval[0]"),
                    rational_from_json(ivj[1], "interval[1]"));
        sched.target = weight_from_json(j.at("target"), iv);
        sched.levels = 6;
        if (j.contains("levels")) {
            if (!j.at("levels").is_number_integer())
                throw ConfigError("config.levels must be an integer");
            sched.levels = j.at("levels").get<int>();
        }
        resolved["interval"] = Json::array({rat_to_string(iv.a), rat_to_string(iv.b)});
    } else {
        // tent on [0, 1]
        Interval iv(Rational(0), Rational(1));
        sched.target = make_pl_weight({Rational(0), Rational(1, 2), Rational(1)},
                                      {Rational(0), Rational(1, 2), Rational(0)});
        sched.levels = 6;
        resolved["interval"] = Json::array({"0", "1"});
    }
    if (o.count >= 0) sched.levels = o.count;

    std::vector<ConvergenceEntry> entries = smoothing_convergence(sched);

    resolved["target"] = weight_to_json(sched.target);
    resolved["levels"] = sched.levels;
    Json body;
    body["levels"] = convergence_to_json(entries);
    Json ratios = Json::array();
    for (size_t i = 1; i < entries.size(); ++i)
        ratios.push_back(entries[i].sup_distance / entries[i - 1].sup_distance);
    body["ratios"] = std::move(ratios);
    emit(dump_json(report_envelope("smooth", resolved, body)), o.out);
    return 0;
}

int run_search(const Options& o) {
    require_json_format(o, "search");
    Interval iv(Rational(0), Rational(1));
    WeightSpec w = make_constant_weight(iv, Rational(1));
    if (!o.config.empty()) {
        Json j = load_json(o.config);
        if (!j.is_object()) throw ConfigError("config must be a JSON object");
        for (const auto& [key, value] : j.items()) {
            (void)value;
            if (key != "interval" && key != "weight")
                throw ConfigError("unknown key '" + key + "' in config");
        }
        for (const char* k : {"interval", "weight"})
            if (!j.contains(k)) throw ConfigError(std::string("config is missing '") + k + "'");
        const Json& ivj = j.at("interval");
        if (!ivj.is_array() || ivj.size() != 2)
            throw ConfigError("config.interval must be a two-element array");
        iv = Interval(rational_from_json(ivj[0], "interval[0]"),
                      rational_from_json(ivj[1], "interval[1]"));
        w = weight_from_json(j.at("weight"), iv);
    }

    QuadraticForms forms = assemble_forms(w, iv, o.basis_size);
    SearchOptions so;
    so.grad_tol = tol_or(o, 1e-8);
    SearchResult r = maximize_kappa(forms, o.seed, so);

    Json resolved;
    resolved["interval"] = Json::array({rat_to_string(iv.a), rat_to_string(iv.b)});
    resolved["weight"] = weight_to_json(w);
    resolved["basis_size"] = o.basis_size;
    resolved["seed"] = std::to_string(o.seed);
    resolved["grad_tol"] = so.grad_tol;
    emit(dump_json(report_envelope("search", resolved, search_result_to_json(forms, r))), o.out);
    return 0;
}

int run_identities(const Options& o) {
    require_json_format(o, "identities");

    // defaults: the closed-form instances where both identity sides are known
    Interval unit(Rational(0), Rational(1));
    InstanceConfig parts;
    parts.iv = unit;
    parts.weight = make_poly_weight(unit, Polynomial({Rational(0), Rational(1), Rational(-1)}));
    parts.function.body = SineCombination{unit, {{Rational(1), 1}}};
    parts.function.bc = BoundaryCondition::DirichletDirichlet;

    InstanceConfig lem;
    lem.iv = unit;
    lem.weight = make_pl_weight({Rational(0), Rational(1)}, {Rational(0), Rational(1)});
    lem.function = parts.function;

    double A = 2, B = 3, C = 5;
    std::vector<double> eps_grid{0.125, 0.5, 1, 4};

    if (!o.config.empty()) {
        Json j = load_json(o.config);
        if (!j.is_object()) throw ConfigError("config must be a JSON object");
        for (const auto& [key, value] : j.items()) {
            (void)value;
            if (key != "parts" && key != "lemma4" && key != "epsilon")
                throw ConfigError("unknown key '" + key + "' in config");
        }
        if (j.contains("parts")) parts = instance_from_json(j.at("parts"));
        if (j.contains("lemma4")) lem = instance_from_json(j.at("lemma4"));
        if (j.contains("epsilon")) {
            const Json& e = j.at("epsilon");
            for (const auto& [key, value] : e.items()) {
                (void)value;
                if (key != "A" && key != "B" && key != "C" && key != "eps_grid")
                    throw ConfigError("unknown key '" + key + "' in config.epsilon");
            }
            for (const char* k : {"A", "B", "C", "eps_grid"})
                if (!e.contains(k))
                    throw ConfigError(std::string("config.epsilon is missing '") + k + "'");
            A = e.at("A").get<double>();
            B = e.at("B").get<double>();
            C = e.at("C").get<double>();
            eps_grid.clear();
            for (const auto& x : e.at("eps_grid")) eps_grid.push_back(x.get<double>());
        }
    }

    const double tol = tol_or(o, 1e-9);
    const double parts_res = parts_identity_residual(parts.weight, parts.function, parts.iv);
    const double lem_res = lemma4_residual(lem.weight, lem.function, lem.iv);
    EpsilonEquivalence eq = epsilon_equivalence_check(A, B, C, eps_grid);
    const bool ok = parts_res <= tol && lem_res <= tol && eq.consistent;

    Json resolved;
    resolved["parts"] = instance_to_json(parts);
    resolved["lemma4"] = instance_to_json(lem);
    resolved["epsilon"] = Json{{"A", A}, {"B", B}, {"C", C}, {"eps_grid", eps_grid}};
    resolved["tol"] = tol;

    Json grid = Json::array();
    for (const auto& [eps, holds] : eq.grid_results)
        grid.push_back(Json{{"eps", eps}, {"holds", holds}});
    Json body;
    body["parts_residual"] = parts_res;
    body["lemma4_residual"] = lem_res;
    body["epsilon"] = Json{{"b2_le_ac", eq.b2_le_ac},
                           {"grid", std::move(grid)},
                           {"consistent", eq.consistent}};
    body["pass"] = ok;
    emit(dump_json(report_envelope("identities", resolved, body)), o.out);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted HELP-inequality toolkit (kappa <= 1 for concave weights)"};
    app.set_version_flag("--version", HLKAPPA_VERSION);
    app.require_subcommand(1);

    Options o;
    std::string selected;

    auto add_common = [&](CLI::App* sub, bool with_format) {
        sub->add_option("--out", o.out, "write the report here instead of stdout");
        if (with_format)
            sub->add_option("--format", o.format, "output format (default json)")
                ->check(CLI::IsMember({"json", "csv"}));
        sub->callback([&, sub] { selected = sub->get_name(); });
    };

    auto* kappa_sub = app.add_subcommand("kappa", "compute the quotient on a configured instance");
    kappa_sub->add_option("--config", o.config, "instance config (interval, weight, function)")
        ->required();
    kappa_sub->add_option("--tol", o.tol, "adaptive quadrature tolerance (default 1e-11)");
    kappa_sub->add_flag("--exact", o.exact, "demand the exact rational route");
    add_common(kappa_sub, false);

    auto* verify_sub =
        app.add_subcommand("verify", "theorem check: one instance with --config, else a sweep");
    verify_sub->add_option("--config", o.config, "optional single instance to verify");
    verify_sub->add_option("--seed", o.seed, "sweep seed (default 42)");
    verify_sub->add_option("--count", o.count, "sweep size (default 1000)");
    verify_sub->add_option("--tol", o.tol,
                           "chain residual tolerance, or slack with --config (default 1e-9)");
    verify_sub->add_flag("--exact", o.exact, "demand the exact rational route (--config only)");
    add_common(verify_sub, true);

    auto* eq_sub = app.add_subcommand(
        "equality", "equality family: kappa = 1 exactly, < 1 after perturbation");
    eq_sub->add_option("--config", o.config,
                       "one case (interval, n, lambda, node_values[, perturb_segment])");
    eq_sub->add_option("--seed", o.seed, "generation seed (default 42)");
    eq_sub->add_option("--count", o.count, "number of random cases (default 10)");
    add_common(eq_sub, false);

    auto* refl_sub =
        app.add_subcommand("reflect", "corollary path: reflect evenly, verify on the double");
    refl_sub->add_option("--config", o.config, "instance config (function with f(a)=f'(b)=0)")
        ->required();
    refl_sub->add_option("--tol", o.tol, "path agreement tolerance (default 1e-9)");
    add_common(refl_sub, false);

    auto* wit_sub = app.add_subcommand("witness", "convex-weight counterexample study");
    wit_sub->add_option("--deltas", o.deltas,
                        "comma-separated rationals in (0, 1/2) "
                        "(default 2/5,1/4,1/10,1/20,1/100,1/1000)");
    add_common(wit_sub, true);

    auto* mono_sub =
        app.add_subcommand("monotonicity", "decreasing-weight example (kappa about 5.5835)");
    add_common(mono_sub, false);

    auto* smooth_sub = app.add_subcommand("smooth", "mollification convergence for a concave target");
    smooth_sub->add_option("--config", o.config,
                           "schedule config (interval, target[, levels]); default: tent on [0,1]");
    smooth_sub->add_option("--count", o.count, "levels override (default 6)");
    add_common(smooth_sub, false);

    auto* search_sub = app.add_subcommand("search", "Galerkin ascent for sup kappa over splines");
    search_sub->add_option("--config", o.config,
                           "search config (interval, weight); default: w = 1 on [0,1]");
    search_sub->add_option("--basis-size", o.basis_size, "spline count m >= 4 (default 24)");
    search_sub->add_option("--seed", o.seed, "start perturbation seed (default 42)");
    search_sub->add_option("--tol", o.tol, "gradient norm stop (default 1e-8)");
    add_common(search_sub, false);

    auto* id_sub =
        app.add_subcommand("identities", "proof-identity residuals and the epsilon split");
    id_sub->add_option("--config", o.config,
                       "optional overrides (parts, lemma4, epsilon); defaults are the "
                       "closed-form instances");
    id_sub->add_option("--tol", o.tol, "residual tolerance (default 1e-9)");
    add_common(id_sub, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
        std::cerr << "error: " << single_line(e.what()) << "\n";
        return 2;
    }

    try {
        if (selected == "kappa") return run_kappa(o);
        if (selected == "verify") return run_verify(o);
        if (selected == "equality") return run_equality(o);
        if (selected == "reflect") return run_reflect(o);
        if (selected == "witness") return run_witness(o);
        if (selected == "monotonicity") return run_monotonicity(o);
        if (selected == "smooth") return run_smooth(o);
        if (selected == "search") return run_search(o);
        if (selected == "identities") return run_identities(o);
        std::cerr << "error: no subcommand selected\n";
        return 2;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << single_line(e.what()) << "\n";
        return 1;
    } catch (const std::exception& e) {
        // config/parameter/hypothesis/mode/degenerate: the input is unusable
        std::cerr << "error: " << single_line(e.what()) << "\n";
        return 2;
    }
}
