#ifndef HLKAPPA_JSON_IO_HPP_
#define HLKAPPA_JSON_IO_HPP_

#include <json.hpp>

#include <string>
#include <vector>

#include "hlkappa/kappa.hpp"
#include "hlkappa/search.hpp"
#include "hlkappa/smoothing.hpp"
#include "hlkappa/witness.hpp"

namespace hlkappa {

using Json = nlohmann::json;

// Config schema (strict: unknown keys are rejected, all numbers may be
// given as exact "p/q" strings):
//
// {
//   "interval": ["0", "1"],
//   "weight":   {"kind": "constant", "value": "1"}
//             | {"kind": "piecewise_linear", "breakpoints": [...], "values": [...]}
//             | {"kind": "polynomial", "coefficients": ["0", "0", "1"]}
//             | {"kind": "piecewise_polynomial", "breakpoints": [...], "pieces": [[...], ...]}
//   "function": {"kind": "sine", "bc": "dirichlet_dirichlet",
//                "terms": [{"lambda": "1", "mode": 1}]}
//             | {"kind": "half_sine", "bc": "dirichlet_neumann",
//                "terms": [{"lambda": "1", "index": 1}]}
//             | {"kind": "piecewise_polynomial", "bc": "...",
//                "breakpoints": [...], "pieces": [[...], ...]}
// }

Rational rational_from_json(const Json& v, const std::string& where);
Json rational_to_json(const Rational& r);  // canonical "p/q" string

WeightSpec weight_from_json(const Json& j, const Interval& iv);
Json weight_to_json(const WeightSpec& w);
TestFunctionSpec function_from_json(const Json& j, const Interval& iv);
Json function_to_json(const TestFunctionSpec& f);

struct InstanceConfig {
    Interval iv{Rational(0), Rational(1)};
    WeightSpec weight;
    TestFunctionSpec function;
};

InstanceConfig instance_from_json(const Json& j);
Json instance_to_json(const InstanceConfig& cfg);

Json kappa_report_to_json(const KappaReport& r);
Json sweep_report_to_json(const SweepReport& r);
std::string sweep_report_to_csv(const SweepReport& r);
Json witness_results_to_json(const std::vector<WitnessResult>& rs);
std::string witness_results_to_csv(const std::vector<WitnessResult>& rs);
Json convergence_to_json(const std::vector<ConvergenceEntry>& entries);
// includes the best function sampled on a 257-point grid
Json search_result_to_json(const QuadraticForms& forms, const SearchResult& r);

// {"version", "subcommand", "config", "report"} with sorted keys; reports
// carry the resolved config and tool version, never timestamps, so equal
// inputs produce byte-identical output
Json report_envelope(const std::string& subcommand, const Json& resolved_config,
                     const Json& body);

std::string dump_json(const Json& j);  // 2-space indent, trailing newline

// shortest round-trip decimal form; used by the CSV writers
std::string format_double(double x);

}  // namespace hlkappa

#endif  // HLKAPPA_JSON_IO_HPP_
