#include "crmcast/sweep.hpp"

#include "crmcast/simulator.hpp"

namespace crmcast {

std::vector<CsvRow> run_sweep_rows(const NetworkParams& base, const SweepSpec& spec) {
    NetworkParams params = base;
    if (spec.fixed_rate) {
        params.fixed_rate = *spec.fixed_rate;
    }
    if (spec.fixed_mu) {
        params.fixed_mu = *spec.fixed_mu;
    }

    std::vector<CsvRow> rows;
    rows.reserve(spec.values.size() * spec.schemes.size() * spec.trees.size() *
                 spec.metrics.size());
    for (const double value : spec.values) {
        NetworkParams cell = params;
        apply_sweep_value(cell, spec.parameter, value);
        validate(cell);
        for (const Scheme scheme : spec.schemes) {
            for (const TreeKind tree : spec.trees) {
                for (const MetricKind metric : spec.metrics) {
                    CsvRow row;
                    row.param = sweep_parameter_name(spec.parameter);
                    row.value = value;
                    row.scheme = scheme;
                    row.tree = tree;
                    row.metric = metric;
                    row.result = run_monte_carlo(cell, {scheme, tree, metric});
                    row.master_seed = cell.master_seed;
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    return rows;
}

void run_sweep(const NetworkParams& base, const SweepSpec& spec,
               const std::filesystem::path& out_path) {
    write_csv(run_sweep_rows(base, spec), out_path);
}

} // namespace crmcast
