#include "hlkappa/json_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <variant>

#include "hlkappa/version.hpp"

namespace hlkappa {

namespace {

void require_object(const Json& j, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
}

void require_keys(const Json& j, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional, const std::string& where) {
    require_object(j, where);
    for (const char* k : required)
        if (!j.contains(k)) throw ConfigError(where + " is missing required key '" + k + "'");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool known = false;
        for (const char* k : required) known = known || key == k;
        for (const char* k : optional) known = known || key == k;
        if (!known) throw ConfigError("unknown key '" + key + "' in " + where);
    }
}

std::vector<Rational> rational_array(const Json& v, const std::string& where) {
    if (!v.is_array()) throw ConfigError(where + " must be an array");
    std::vector<Rational> out;
    out.reserve(v.size());
    size_t i = 0;
    for (const auto& e : v) out.push_back(rational_from_json(e, where + "[" + std::to_string(i++) + "]"));
    return out;
}

Polynomial poly_from_json(const Json& v, const std::string& where) {
    return Polynomial(rational_array(v, where));
}

Json poly_to_json(const Polynomial& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(rat_to_string(c));
    return a;
}

PiecewisePolynomial pp_from_json(const Json& j, const std::string& where) {
    const auto brk = rational_array(j.at("breakpoints"), where + ".breakpoints");
    const Json& pieces = j.at("pieces");
    if (!pieces.is_array()) throw ConfigError(where + ".pieces must be an array of arrays");
    std::vector<Polynomial> pcs;
    size_t i = 0;
    for (const auto& p : pieces)
        pcs.push_back(poly_from_json(p, where + ".pieces[" + std::to_string(i++) + "]"));
    if (brk.size() != pcs.size() + 1)
        throw ConfigError(where + ": need one more breakpoint than pieces");
    for (size_t k = 0; k + 1 < brk.size(); ++k)
        if (!(brk[k] < brk[k + 1]))
            throw ConfigError(where + ".breakpoints must be strictly increasing");
    return PiecewisePolynomial(brk, pcs);
}

void pp_to_json(Json& j, const PiecewisePolynomial& pp) {
    Json brk = Json::array();
    for (const auto& b : pp.breakpoints()) brk.push_back(rat_to_string(b));
    Json pcs = Json::array();
    for (const auto& p : pp.pieces()) pcs.push_back(poly_to_json(p));
    j["breakpoints"] = std::move(brk);
    j["pieces"] = std::move(pcs);
}

void require_span(const Interval& got, const Interval& iv, const std::string& where) {
    if (!(got == iv))
        throw ConfigError(where + " spans a different interval than the config");
}

BoundaryCondition bc_from_json(const Json& j, BoundaryCondition fallback,
                               const std::string& where) {
    if (!j.contains("bc")) return fallback;
    const Json& v = j.at("bc");
    if (!v.is_string()) throw ConfigError(where + ".bc must be a string");
    const std::string s = v.get<std::string>();
    for (BoundaryCondition bc :
         {BoundaryCondition::DirichletDirichlet, BoundaryCondition::DirichletNeumann,
          BoundaryCondition::NeumannDirichlet})
        if (s == bc_name(bc)) return bc;
    throw ConfigError(where + ".bc: unknown boundary condition '" + s + "'");
}

}  // namespace

Rational rational_from_json(const Json& v, const std::string& where) {
    try {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long long>());
        if (v.is_number_float()) return Rational(v.get<double>());
    } catch (const std::exception& e) {
        throw ConfigError(where + ": " + e.what());
    }
    throw ConfigError(where + " must be a number or a 'p/q' string");
}

Json rational_to_json(const Rational& r) { return rat_to_string(r); }

WeightSpec weight_from_json(const Json& j, const Interval& iv) {
    require_object(j, "weight");
    if (!j.contains("kind")) throw ConfigError("weight is missing required key 'kind'");
    const std::string kind = j.at("kind").is_string() ? j.at("kind").get<std::string>() : "";
    if (kind == "constant") {
        require_keys(j, {"kind", "value"}, {}, "weight");
        return make_constant_weight(iv, rational_from_json(j.at("value"), "weight.value"));
    }
    if (kind == "piecewise_linear") {
        require_keys(j, {"kind", "breakpoints", "values"}, {}, "weight");
        const auto brk = rational_array(j.at("breakpoints"), "weight.breakpoints");
        const auto val = rational_array(j.at("values"), "weight.values");
        if (brk.size() < 2 || brk.size() != val.size())
            throw ConfigError("weight: breakpoints and values must match, length >= 2");
        require_span(Interval(brk.front(), brk.back()), iv, "weight");
        return make_pl_weight(brk, val);
    }
    if (kind == "polynomial") {
        require_keys(j, {"kind", "coefficients"}, {}, "weight");
        return make_poly_weight(iv,
                                poly_from_json(j.at("coefficients"), "weight.coefficients"));
    }
    if (kind == "piecewise_polynomial") {
        require_keys(j, {"kind", "breakpoints", "pieces"}, {}, "weight");
        PiecewisePolynomial pp = pp_from_json(j, "weight");
        require_span(pp.interval(), iv, "weight");
        return make_pp_weight(std::move(pp));
    }
    throw ConfigError("weight.kind: unknown kind '" + kind + "'");
}

Json weight_to_json(const WeightSpec& w) {
    Json j;
    if (const auto* cw = std::get_if<ConstantWeight>(&w.body)) {
        j["kind"] = "constant";
        j["value"] = rat_to_string(cw->value);
    } else if (const auto* pl = std::get_if<PiecewiseLinearWeight>(&w.body)) {
        j["kind"] = "piecewise_linear";
        Json brk = Json::array(), val = Json::array();
        for (const auto& b : pl->breakpoints) brk.push_back(rat_to_string(b));
        for (const auto& v : pl->values) val.push_back(rat_to_string(v));
        j["breakpoints"] = std::move(brk);
        j["values"] = std::move(val);
    } else if (const auto* pw = std::get_if<PolynomialWeight>(&w.body)) {
        j["kind"] = "polynomial";
        j["coefficients"] = poly_to_json(pw->p);
    } else {
        j["kind"] = "piecewise_polynomial";
        pp_to_json(j, std::get<PiecewisePolynomialWeight>(w.body).pp);
    }
    return j;
}

TestFunctionSpec function_from_json(const Json& j, const Interval& iv) {
    require_object(j, "function");
    if (!j.contains("kind")) throw ConfigError("function is missing required key 'kind'");
    const std::string kind = j.at("kind").is_string() ? j.at("kind").get<std::string>() : "";
    TestFunctionSpec f;
    if (kind == "sine" || kind == "half_sine") {
        require_keys(j, {"kind", "terms"}, {"bc"}, "function");
        const Json& terms = j.at("terms");
        if (!terms.is_array() || terms.empty())
            throw ConfigError("function.terms must be a nonempty array");
        const char* idx_key = kind == "sine" ? "mode" : "index";
        std::vector<std::pair<Rational, int>> parsed;
        size_t i = 0;
        for (const auto& t : terms) {
            const std::string where = "function.terms[" + std::to_string(i++) + "]";
            require_keys(t, {"lambda", idx_key}, {}, where);
            const Json& n = t.at(idx_key);
            if (!n.is_number_integer() || n.get<long long>() < 1)
                throw ConfigError(where + "." + idx_key + " must be a positive integer");
            parsed.emplace_back(rational_from_json(t.at("lambda"), where + ".lambda"),
                                static_cast<int>(n.get<long long>()));
        }
        if (kind == "sine") {
            f.body = SineCombination{iv, std::move(parsed)};
            f.bc = bc_from_json(j, BoundaryCondition::DirichletDirichlet, "function");
        } else {
            f.body = HalfSineCombination{iv, std::move(parsed)};
            f.bc = bc_from_json(j, BoundaryCondition::DirichletNeumann, "function");
        }
        return f;
    }
    if (kind == "piecewise_polynomial") {
        require_keys(j, {"kind", "breakpoints", "pieces"}, {"bc"}, "function");
        PiecewisePolynomial pp = pp_from_json(j, "function");
        require_span(pp.interval(), iv, "function");
        f.body = std::move(pp);
        f.bc = bc_from_json(j, BoundaryCondition::DirichletDirichlet, "function");
        return f;
    }
    throw ConfigError("function.kind: unknown kind '" + kind + "'");
}

Json function_to_json(const TestFunctionSpec& f) {
    Json j;
    j["bc"] = bc_name(f.bc);
    if (const auto* sc = std::get_if<SineCombination>(&f.body)) {
        j["kind"] = "sine";
        Json terms = Json::array();
        for (const auto& [lam, n] : sc->terms)
            terms.push_back({{"lambda", rat_to_string(lam)}, {"mode", n}});
        j["terms"] = std::move(terms);
    } else if (const auto* hs = std::get_if<HalfSineCombination>(&f.body)) {
        j["kind"] = "half_sine";
        Json terms = Json::array();
        for (const auto& [lam, n] : hs->terms)
            terms.push_back({{"lambda", rat_to_string(lam)}, {"index", n}});
        j["terms"] = std::move(terms);
    } else {
        j["kind"] = "piecewise_polynomial";
        pp_to_json(j, std::get<PiecewisePolynomial>(f.body));
    }
    return j;
}

InstanceConfig instance_from_json(const Json& j) {
    require_keys(j, {"interval", "weight", "function"}, {}, "config");
    const Json& ivj = j.at("interval");
    if (!ivj.is_array() || ivj.size() != 2)
        throw ConfigError("config.interval must be a two-element array");
    const Rational a = rational_from_json(ivj[0], "config.interval[0]");
    const Rational b = rational_from_json(ivj[1], "config.interval[1]");
    if (!(a < b)) throw ConfigError("config.interval must satisfy a < b");

    InstanceConfig cfg;
    cfg.iv = Interval(a, b);
    try {
        cfg.weight = weight_from_json(j.at("weight"), cfg.iv);
        cfg.function = function_from_json(j.at("function"), cfg.iv);
    } catch (const ParameterError& e) {
        // bad geometry in a config file is a config problem
        throw ConfigError(std::string("config: ") + e.what());
    }
    return cfg;
}

Json instance_to_json(const InstanceConfig& cfg) {
    Json j;
    j["interval"] = Json::array({rat_to_string(cfg.iv.a), rat_to_string(cfg.iv.b)});
    j["weight"] = weight_to_json(cfg.weight);
    j["function"] = function_to_json(cfg.function);
    return j;
}

Json kappa_report_to_json(const KappaReport& r) {
    Json j;
    j["I0"] = r.I0;
    j["I1"] = r.I1;
    j["I2"] = r.I2;
    j["kappa"] = r.kappa;
    j["mode"] = r.mode == QuadMode::Exact ? "exact" : "adaptive";
    j["error_bound"] = r.error_bound;
    if (r.kappa_exact) {
        j["I0_rational"] = rat_to_string(*r.I0_exact);
        j["I1_rational"] = rat_to_string(*r.I1_exact);
        j["I2_rational"] = rat_to_string(*r.I2_exact);
        j["kappa_rational"] = rat_to_string(*r.kappa_exact);
    }
    return j;
}

Json sweep_report_to_json(const SweepReport& r) {
    Json j;
    j["count"] = r.count;
    j["failures"] = r.failures;
    j["max_kappa"] = r.max_kappa;
    j["closest_to_one"] = r.closest_to_one;
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json row;
        row["index"] = e.index;
        row["kappa"] = e.kappa;
        row["I0"] = e.I0;
        row["I1"] = e.I1;
        row["I2"] = e.I2;
        row["pass"] = e.pass;
        row["chain_ok"] = e.chain_ok;
        // 64-bit values as strings: JSON numbers lose precision past 2^53
        row["weight_seed"] = std::to_string(e.weight_seed);
        row["function_seed"] = std::to_string(e.function_seed);
        row["weight_hash"] = std::to_string(e.weight_hash);
        row["function_hash"] = std::to_string(e.function_hash);
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

std::string sweep_report_to_csv(const SweepReport& r) {
    std::ostringstream os;
    os << "index,kappa,I0,I1,I2,weight_hash,function_hash\n";
    for (const auto& e : r.entries) {
        os << e.index << ',' << format_double(e.kappa) << ',' << format_double(e.I0) << ','
           << format_double(e.I1) << ',' << format_double(e.I2) << ',' << e.weight_hash << ','
           << e.function_hash << '\n';
    }
    return os.str();
}

Json witness_results_to_json(const std::vector<WitnessResult>& rs) {
    Json rows = Json::array();
    for (const auto& r : rs) {
        Json row;
        row["delta"] = rat_to_string(r.delta);
        for (size_t k = 0; k < 6; ++k)
            row["a" + std::to_string(k)] = rat_to_string(r.coefficients[k]);
        row["kappa_exact"] = rat_to_string(r.kappa_exact);
        row["kappa_exact_decimal"] = to_double(r.kappa_exact);
        row["kappa_closed_form"] = rat_to_string(r.kappa_closed);
        row["match"] = r.match;
        row["delta_times_kappa"] = rat_to_string(r.delta_times_kappa);
        row["delta_times_kappa_decimal"] = to_double(r.delta_times_kappa);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string witness_results_to_csv(const std::vector<WitnessResult>& rs) {
    std::ostringstream os;
    os << "delta,a0,a1,a2,a3,a4,a5,kappa_exact,kappa_exact_decimal,kappa_closed_form,match,"
          "delta_times_kappa\n";
    for (const auto& r : rs) {
        os << rat_to_string(r.delta);
        for (size_t k = 0; k < 6; ++k) os << ',' << rat_to_string(r.coefficients[k]);
        os << ',' << rat_to_string(r.kappa_exact) << ',' << format_double(to_double(r.kappa_exact))
           << ',' << rat_to_string(r.kappa_closed) << ',' << (r.match ? "true" : "false") << ','
           << rat_to_string(r.delta_times_kappa) << '\n';
    }
    return os.str();
}

Json convergence_to_json(const std::vector<ConvergenceEntry>& entries) {
    Json rows = Json::array();
    for (const auto& e : entries) {
        Json row;
        row["level"] = e.level;
        row["sup_distance"] = e.sup_distance;
        row["grid_error_bound"] = e.grid_error_bound;
        rows.push_back(std::move(row));
    }
    return rows;
}

Json search_result_to_json(const QuadraticForms& forms, const SearchResult& r) {
    Json j;
    j["best_kappa"] = r.best_kappa;
    j["iterations"] = r.iterations;
    j["converged"] = r.converged;
    j["gradient_norm_final"] = r.gradient_norm_final;
    j["basis_size"] = forms.m;
    Json coeffs = Json::array();
    for (int i = 0; i < r.best_coefficients.size(); ++i) coeffs.push_back(r.best_coefficients(i));
    j["coefficients"] = std::move(coeffs);

    constexpr int kSamples = 257;
    const double a = to_double(forms.iv.a);
    const double len = to_double(forms.iv.length());
    Json xs = Json::array(), fs = Json::array();
    for (int k = 0; k < kSamples; ++k) {
        const double x = a + len * k / (kSamples - 1);
        xs.push_back(x);
        fs.push_back(evaluate_spline(forms, r.best_coefficients, x));
    }
    j["samples"] = Json{{"x", std::move(xs)}, {"f", std::move(fs)}};
    return j;
}

Json report_envelope(const std::string& subcommand, const Json& resolved_config,
                     const Json& body) {
    Json j;
    j["version"] = HLKAPPA_VERSION;
    j["subcommand"] = subcommand;
    j["config"] = resolved_config;
    j["report"] = body;
    return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

}  // namespace hlkappa
