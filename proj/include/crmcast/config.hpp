#pragma once

#include "crmcast/params.hpp"
#include "crmcast/simulator.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace crmcast {

// Parameter a sweep can vary; one CSV row is produced per (value, scheme,
// tree, metric) combination.
enum class SweepParameter {
    Bandwidth,
    PacketBits,
    NumChannels,
    TxPower,
    NumNodes,
    NumDestinations,
    TxRange,
    FieldSide,
    IdleProb,
};

std::string sweep_parameter_name(SweepParameter p);
SweepParameter parse_sweep_parameter(std::string_view name);  // throws ValidationError

// Sets the swept field on a copy of the base parameters. Integer-valued
// parameters require integral values (throws ValidationError otherwise).
void apply_sweep_value(NetworkParams& params, SweepParameter parameter, double value);

struct SweepSpec {
    SweepParameter parameter = SweepParameter::Bandwidth;
    std::vector<double> values;              // strictly increasing, non-empty
    std::vector<Scheme> schemes;             // non-empty, unique
    std::vector<TreeKind> trees;             // non-empty, unique
    std::vector<MetricKind> metrics;         // non-empty, unique
    std::optional<double> fixed_rate;        // extreme override, bits/s
    std::optional<double> fixed_mu;          // extreme override, s
};

struct ExperimentConfig {
    NetworkParams params;
    SimConfig run;                      // selection for the `run` subcommand
    std::optional<SweepSpec> sweep;     // required by the `sweep` subcommand
};

// Parses and validates a JSON config. Sections: "network" (any NetworkParams
// key, all optional), "run" ("scheme", "tree", "metric"), "sweep"
// ("parameter", "values", "schemes", "trees", "metrics", "fixed_rate",
// "fixed_mu"). Unknown sections or keys are errors. Throws IoError if the
// file cannot be read, ValidationError for syntax or semantic problems.
ExperimentConfig parse_config(const std::filesystem::path& path);

// Same, from an in-memory document; `origin` labels error messages.
ExperimentConfig parse_config_text(std::string_view text, std::string_view origin);

// Every config key with its default value and a one-line description, for
// --help. Defaults are rendered from a default-constructed NetworkParams, so
// the listing cannot drift from the code.
struct ConfigKeyHelp {
    std::string key;
    std::string default_value;
    std::string description;
};
std::vector<ConfigKeyHelp> config_key_help();

Scheme parse_scheme(std::string_view name);        // "POS" | "MASA" | "MDR" | "RS"
TreeKind parse_tree_kind(std::string_view name);   // "SPT" | "MST"
MetricKind parse_metric_kind(std::string_view name);  // "ETX" | "Distance"

} // namespace crmcast
