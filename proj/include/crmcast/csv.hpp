#pragma once

#include "crmcast/simulator.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace crmcast {

// One result row. `param`/`value` name the swept parameter ("none"/0 for a
// single run); numeric columns are printed with 17 significant digits so the
// files round-trip doubles exactly and byte-compare across runs.
struct CsvRow {
    std::string param = "none";
    double value = 0.0;
    Scheme scheme = Scheme::Pos;
    TreeKind tree = TreeKind::Spt;
    MetricKind metric = MetricKind::Etx;
    SimResult result;
    std::uint64_t master_seed = 0;
};

// Exactly 17 significant digits ("%.17g"), locale-independent.
std::string format_full(double v);

std::string csv_header();
std::string format_csv_row(const CsvRow& row);

// Header plus one line per row, final line newline-terminated. Throws IoError
// when the file cannot be written.
void write_csv(std::span<const CsvRow> rows, const std::filesystem::path& path);

// The same bytes write_csv would produce.
std::string csv_text(std::span<const CsvRow> rows);

} // namespace crmcast
