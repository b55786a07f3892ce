#pragma once

#include "crmcast/config.hpp"
#include "crmcast/csv.hpp"

#include <filesystem>
#include <vector>

namespace crmcast {

// Runs the full grid: for each value (in order), for each scheme, tree, and
// metric (in the order listed in the spec), one Monte-Carlo result. Sweep-level
// fixed_rate / fixed_mu override the base parameters first.
std::vector<CsvRow> run_sweep_rows(const NetworkParams& base, const SweepSpec& spec);

// run_sweep_rows + write_csv. Throws IoError on write failure.
void run_sweep(const NetworkParams& base, const SweepSpec& spec,
               const std::filesystem::path& out_path);

} // namespace crmcast
