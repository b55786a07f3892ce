#include "crmcast/config.hpp"

#include "crmcast/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

namespace crmcast {

namespace {

using nlohmann::json;

std::string render_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ValidationError(where + ": " + what);
}

double as_double(const json& j, const std::string& where) {
    if (!j.is_number()) {
        fail(where, "expected a number");
    }
    return j.get<double>();
}

int as_int(const json& j, const std::string& where) {
    const double v = as_double(j, where);
    if (v != std::floor(v) || std::abs(v) > 1e9) {
        fail(where, "expected an integer");
    }
    return static_cast<int>(v);
}

std::uint64_t as_u64(const json& j, const std::string& where) {
    if (j.is_number_unsigned()) {
        return j.get<std::uint64_t>();
    }
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
        return static_cast<std::uint64_t>(j.get<std::int64_t>());
    }
    fail(where, "expected a non-negative integer");
}

std::string as_string(const json& j, const std::string& where) {
    if (!j.is_string()) {
        fail(where, "expected a string");
    }
    return j.get<std::string>();
}

// One "network" section key: how to set it, and how to render its default.
struct NetworkKey {
    const char* key;
    const char* description;
    std::function<void(NetworkParams&, const json&, const std::string&)> set;
    std::function<std::string(const NetworkParams&)> render;
};

const std::vector<NetworkKey>& network_keys() {
    static const std::vector<NetworkKey> keys = [] {
        std::vector<NetworkKey> k;
        auto add_double = [&k](const char* key, double NetworkParams::* field,
                               const char* description) {
            k.push_back({key, description,
                         [field](NetworkParams& p, const json& j, const std::string& where) {
                             p.*field = as_double(j, where);
                         },
                         [field](const NetworkParams& p) { return render_number(p.*field); }});
        };
        auto add_int = [&k](const char* key, int NetworkParams::* field,
                            const char* description) {
            k.push_back({key, description,
                         [field](NetworkParams& p, const json& j, const std::string& where) {
                             p.*field = as_int(j, where);
                         },
                         [field](const NetworkParams& p) { return std::to_string(p.*field); }});
        };
        auto add_opt = [&k](const char* key, std::optional<double> NetworkParams::* field,
                            const char* description) {
            k.push_back({key, description,
                         [field](NetworkParams& p, const json& j, const std::string& where) {
                             if (j.is_null()) {
                                 p.*field = std::nullopt;
                             } else {
                                 p.*field = as_double(j, where);
                             }
                         },
                         [field](const NetworkParams& p) {
                             return (p.*field) ? render_number(*(p.*field)) : std::string("unset");
                         }});
        };
        add_double("field_side", &NetworkParams::field_side,
                   "side of the square deployment area, m");
        add_int("num_nodes", &NetworkParams::num_nodes, "total nodes, source included");
        add_int("num_destinations", &NetworkParams::num_destinations,
                "multicast group size, source excluded");
        add_int("num_channels", &NetworkParams::num_channels, "licensed channels");
        add_double("bandwidth", &NetworkParams::bandwidth, "per-channel bandwidth, Hz");
        add_double("tx_power", &NetworkParams::tx_power, "transmit power, W");
        add_double("packet_bits", &NetworkParams::packet_bits, "packet size, bits");
        add_double("noise_density", &NetworkParams::noise_density,
                   "noise power spectral density, W/Hz");
        add_double("path_loss_exp", &NetworkParams::path_loss_exp, "path-loss exponent");
        add_double("wavelength", &NetworkParams::wavelength, "carrier wavelength, m");
        add_double("tx_range", &NetworkParams::tx_range, "maximum transmission range, m");
        add_double("idle_prob", &NetworkParams::idle_prob,
                   "probability a channel is idle per transmission");
        add_double("mu_low", &NetworkParams::mu_low, "mean idle duration lower bound, s");
        add_double("mu_high", &NetworkParams::mu_high, "mean idle duration upper bound, s");
        add_int("num_packets", &NetworkParams::num_packets, "packets per trial");
        add_int("num_trials", &NetworkParams::num_trials, "Monte-Carlo trials");
        k.push_back({"master_seed", "root seed for all randomness",
                     [](NetworkParams& p, const json& j, const std::string& where) {
                         p.master_seed = as_u64(j, where);
                     },
                     [](const NetworkParams& p) { return std::to_string(p.master_seed); }});
        add_opt("fixed_rate", &NetworkParams::fixed_rate,
                "force every (link, channel) rate, bits/s");
        add_opt("fixed_mu", &NetworkParams::fixed_mu,
                "force every channel's mean idle duration, s");
        return k;
    }();
    return keys;
}

template <typename T, typename Parse>
std::vector<T> parse_name_list(const json& j, const std::string& where, Parse parse) {
    if (!j.is_array() || j.empty()) {
        fail(where, "expected a non-empty array of names");
    }
    std::vector<T> out;
    for (const auto& item : j) {
        const T v = parse(as_string(item, where));
        if (std::find(out.begin(), out.end(), v) != out.end()) {
            fail(where, "duplicate entry");
        }
        out.push_back(v);
    }
    return out;
}

SweepSpec parse_sweep_section(const json& j, const NetworkParams& params) {
    SweepSpec spec;
    spec.schemes = {Scheme::Pos, Scheme::Masa, Scheme::Mdr, Scheme::Rs};
    spec.trees = {TreeKind::Spt};
    spec.metrics = {MetricKind::Etx};
    bool have_parameter = false;
    bool have_values = false;
    for (const auto& [key, value] : j.items()) {
        const std::string where = "sweep." + key;
        if (key == "parameter") {
            spec.parameter = parse_sweep_parameter(as_string(value, where));
            have_parameter = true;
        } else if (key == "values") {
            if (!value.is_array() || value.empty()) {
                fail(where, "expected a non-empty array of numbers");
            }
            for (const auto& item : value) {
                spec.values.push_back(as_double(item, where));
            }
            have_values = true;
        } else if (key == "schemes") {
            spec.schemes = parse_name_list<Scheme>(value, where, parse_scheme);
        } else if (key == "trees") {
            spec.trees = parse_name_list<TreeKind>(value, where, parse_tree_kind);
        } else if (key == "metrics") {
            spec.metrics = parse_name_list<MetricKind>(value, where, parse_metric_kind);
        } else if (key == "fixed_rate") {
            if (!value.is_null()) {
                spec.fixed_rate = as_double(value, where);
            }
        } else if (key == "fixed_mu") {
            if (!value.is_null()) {
                spec.fixed_mu = as_double(value, where);
            }
        } else {
            fail(where, "unknown key");
        }
    }
    if (!have_parameter) {
        fail("sweep.parameter", "missing");
    }
    if (!have_values) {
        fail("sweep.values", "missing");
    }
    for (std::size_t i = 1; i < spec.values.size(); ++i) {
        if (!(spec.values[i - 1] < spec.values[i])) {
            fail("sweep.values", "must be strictly increasing");
        }
    }
    // Every grid cell must yield a valid parameter set.
    for (const double v : spec.values) {
        NetworkParams cell = params;
        if (spec.fixed_rate) {
            cell.fixed_rate = *spec.fixed_rate;
        }
        if (spec.fixed_mu) {
            cell.fixed_mu = *spec.fixed_mu;
        }
        apply_sweep_value(cell, spec.parameter, v);
        validate(cell);
    }
    return spec;
}

} // namespace

std::string sweep_parameter_name(SweepParameter p) {
    switch (p) {
    case SweepParameter::Bandwidth:
        return "bandwidth";
    case SweepParameter::PacketBits:
        return "packet_bits";
    case SweepParameter::NumChannels:
        return "num_channels";
    case SweepParameter::TxPower:
        return "tx_power";
    case SweepParameter::NumNodes:
        return "num_nodes";
    case SweepParameter::NumDestinations:
        return "num_destinations";
    case SweepParameter::TxRange:
        return "tx_range";
    case SweepParameter::FieldSide:
        return "field_side";
    case SweepParameter::IdleProb:
        return "idle_prob";
    }
    return {};
}

SweepParameter parse_sweep_parameter(std::string_view name) {
    for (const auto p :
         {SweepParameter::Bandwidth, SweepParameter::PacketBits, SweepParameter::NumChannels,
          SweepParameter::TxPower, SweepParameter::NumNodes, SweepParameter::NumDestinations,
          SweepParameter::TxRange, SweepParameter::FieldSide, SweepParameter::IdleProb}) {
        if (sweep_parameter_name(p) == name) {
            return p;
        }
    }
    throw ValidationError("unknown sweep parameter: " + std::string(name));
}

void apply_sweep_value(NetworkParams& params, SweepParameter parameter, double value) {
    const auto as_count = [&](const char* key) {
        if (value != std::floor(value)) {
            throw ValidationError(std::string(key) + " sweep values must be integers");
        }
        return static_cast<int>(value);
    };
    switch (parameter) {
    case SweepParameter::Bandwidth:
        params.bandwidth = value;
        break;
    case SweepParameter::PacketBits:
        params.packet_bits = value;
        break;
    case SweepParameter::NumChannels:
        params.num_channels = as_count("num_channels");
        break;
    case SweepParameter::TxPower:
        params.tx_power = value;
        break;
    case SweepParameter::NumNodes:
        params.num_nodes = as_count("num_nodes");
        break;
    case SweepParameter::NumDestinations:
        params.num_destinations = as_count("num_destinations");
        break;
    case SweepParameter::TxRange:
        params.tx_range = value;
        break;
    case SweepParameter::FieldSide:
        params.field_side = value;
        break;
    case SweepParameter::IdleProb:
        params.idle_prob = value;
        break;
    }
}

Scheme parse_scheme(std::string_view name) {
    if (name == "POS") return Scheme::Pos;
    if (name == "MASA") return Scheme::Masa;
    if (name == "MDR") return Scheme::Mdr;
    if (name == "RS") return Scheme::Rs;
    throw ValidationError("unknown scheme: " + std::string(name) +
                          " (expected POS, MASA, MDR, or RS)");
}

TreeKind parse_tree_kind(std::string_view name) {
    if (name == "SPT") return TreeKind::Spt;
    if (name == "MST") return TreeKind::Mst;
    throw ValidationError("unknown tree: " + std::string(name) + " (expected SPT or MST)");
}

MetricKind parse_metric_kind(std::string_view name) {
    if (name == "ETX") return MetricKind::Etx;
    if (name == "Distance") return MetricKind::Distance;
    throw ValidationError("unknown metric: " + std::string(name) +
                          " (expected ETX or Distance)");
}

ExperimentConfig parse_config_text(std::string_view text, std::string_view origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string(origin) + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw ValidationError(std::string(origin) + ": top level must be an object");
    }

    ExperimentConfig config;
    const json* sweep_section = nullptr;
    for (const auto& [section, body] : doc.items()) {
        if (section == "network") {
            if (!body.is_object()) {
                fail("network", "expected an object");
            }
            for (const auto& [key, value] : body.items()) {
                const auto& keys = network_keys();
                const auto it = std::find_if(keys.begin(), keys.end(),
                                             [&](const NetworkKey& k) { return key == k.key; });
                if (it == keys.end()) {
                    fail("network." + key, "unknown key");
                }
                it->set(config.params, value, "network." + key);
            }
        } else if (section == "run") {
            if (!body.is_object()) {
                fail("run", "expected an object");
            }
            for (const auto& [key, value] : body.items()) {
                const std::string where = "run." + key;
                if (key == "scheme") {
                    config.run.scheme = parse_scheme(as_string(value, where));
                } else if (key == "tree") {
                    config.run.tree = parse_tree_kind(as_string(value, where));
                } else if (key == "metric") {
                    config.run.metric = parse_metric_kind(as_string(value, where));
                } else {
                    fail(where, "unknown key");
                }
            }
        } else if (section == "sweep") {
            if (!body.is_object()) {
                fail("sweep", "expected an object");
            }
            sweep_section = &body;
        } else {
            fail(section, "unknown section");
        }
    }
    validate(config.params);
    if (sweep_section != nullptr) {
        config.sweep = parse_sweep_section(*sweep_section, config.params);
    }
    return config;
}

ExperimentConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read config file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("error reading config file: " + path.string());
    }
    return parse_config_text(buffer.str(), path.string());
}

std::vector<ConfigKeyHelp> config_key_help() {
    std::vector<ConfigKeyHelp> out;
    const NetworkParams defaults;
    for (const auto& k : network_keys()) {
        out.push_back({"network." + std::string(k.key), k.render(defaults), k.description});
    }
    const SimConfig run_defaults;
    out.push_back({"run.scheme", scheme_name(run_defaults.scheme),
                   "channel-assignment scheme: POS, MASA, MDR, or RS"});
    out.push_back({"run.tree", tree_kind_name(run_defaults.tree), "routing tree: SPT or MST"});
    out.push_back({"run.metric", metric_kind_name(run_defaults.metric),
                   "link metric: ETX or Distance"});
    out.push_back({"sweep.parameter", "required",
                   "swept parameter: bandwidth, packet_bits, num_channels, tx_power, "
                   "num_nodes, num_destinations, tx_range, field_side, or idle_prob"});
    out.push_back({"sweep.values", "required", "strictly increasing list of values"});
    out.push_back({"sweep.schemes", "all four", "schemes to run per value"});
    out.push_back({"sweep.trees", "SPT", "trees to run per value"});
    out.push_back({"sweep.metrics", "ETX", "metrics to run per value"});
    out.push_back({"sweep.fixed_rate", "unset", "extreme override: force all rates, bits/s"});
    out.push_back({"sweep.fixed_mu", "unset", "extreme override: force all idle durations, s"});
    return out;
}

} // namespace crmcast
