// crmcast: Monte-Carlo simulator for multicast routing and unified channel
// assignment in cognitive radio networks.

#include "crmcast/config.hpp"
#include "crmcast/csv.hpp"
#include "crmcast/errors.hpp"
#include "crmcast/simulator.hpp"
#include "crmcast/sweep.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr const char* kVersion = "1.0.0";

std::string config_key_footer() {
    std::string out = "Config keys (JSON; every key optional unless marked required):\n";
    std::size_t width = 0;
    const auto keys = crmcast::config_key_help();
    for (const auto& k : keys) {
        width = std::max(width, k.key.size() + k.default_value.size() + 12);
    }
    for (const auto& k : keys) {
        std::string lead = "  " + k.key + " (default: " + k.default_value + ")";
        lead.resize(std::max(lead.size() + 2, width + 4), ' ');
        out += lead + k.description + "\n";
    }
    return out;
}

struct CommonOpts {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    int threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool need_out, std::string& out_path) {
    cmd->add_option("--config", opts.config_path, "path to the JSON config file")
        ->required();
    cmd->add_option("--seed", opts.seed, "override network.master_seed");
    cmd->add_option("--threads", opts.threads,
                    "worker threads for the trial loop (default: OpenMP's choice)");
    if (need_out) {
        cmd->add_option("--out", out_path, "path of the CSV file to write")->required();
    }
}

crmcast::ExperimentConfig load(const CommonOpts& opts) {
    auto config = crmcast::parse_config(opts.config_path);
    if (opts.seed) {
        config.params.master_seed = *opts.seed;
    }
    if (opts.threads > 0) {
        omp_set_num_threads(opts.threads);
    }
    return config;
}

int run_command(const CommonOpts& opts) {
    const auto config = load(opts);
    crmcast::CsvRow row;
    row.result = crmcast::run_monte_carlo(config.params, config.run);
    row.scheme = config.run.scheme;
    row.tree = config.run.tree;
    row.metric = config.run.metric;
    row.master_seed = config.params.master_seed;
    std::cout << crmcast::csv_header() << '\n' << crmcast::format_csv_row(row) << '\n';
    return 0;
}

int sweep_command(const CommonOpts& opts, const std::string& out_path) {
    const auto config = load(opts);
    if (!config.sweep) {
        throw crmcast::ValidationError("sweep: config has no sweep section");
    }
    crmcast::run_sweep(config.params, *config.sweep, out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seeded Monte-Carlo simulator of multi-hop multicast sessions in a "
                 "cognitive radio network: probability-of-success link metrics, SPT/MST "
                 "routing trees, and per-group unified channel assignment."};
    app.set_version_flag("--version", std::string("crmcast ") + kVersion);
    app.footer(config_key_footer());
    app.require_subcommand(1);

    CommonOpts run_opts;
    CommonOpts sweep_opts;
    std::string out_path;
    std::string unused;

    auto* run_cmd = app.add_subcommand("run", "one configuration, one CSV row on stdout");
    add_common(run_cmd, run_opts, false, unused);

    auto* sweep_cmd =
        app.add_subcommand("sweep", "parameter sweep, CSV file with one row per grid cell");
    add_common(sweep_cmd, sweep_opts, true, out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exit 0
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (run_cmd->parsed()) {
            return run_command(run_opts);
        }
        return sweep_command(sweep_opts, out_path);
    } catch (const crmcast::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
