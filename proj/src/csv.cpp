#include "crmcast/csv.hpp"

#include "crmcast/errors.hpp"

#include <cstdio>
#include <fstream>

namespace crmcast {

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_header() {
    return "param,value,scheme,tree,metric,throughput_bps,throughput_stderr,pdr,"
           "pdr_stderr,trials,master_seed";
}

std::string format_csv_row(const CsvRow& row) {
    std::string out;
    out += row.param;
    out += ',';
    out += format_full(row.value);
    out += ',';
    out += scheme_name(row.scheme);
    out += ',';
    out += tree_kind_name(row.tree);
    out += ',';
    out += metric_kind_name(row.metric);
    out += ',';
    out += format_full(row.result.throughput);
    out += ',';
    out += format_full(row.result.throughput_stderr);
    out += ',';
    out += format_full(row.result.pdr);
    out += ',';
    out += format_full(row.result.pdr_stderr);
    out += ',';
    out += std::to_string(row.result.trials);
    out += ',';
    out += std::to_string(row.master_seed);
    return out;
}

std::string csv_text(std::span<const CsvRow> rows) {
    std::string out = csv_header();
    out += '\n';
    for (const auto& row : rows) {
        out += format_csv_row(row);
        out += '\n';
    }
    return out;
}

void write_csv(std::span<const CsvRow> rows, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open output file: " + path.string());
    }
    out << csv_text(rows);
    out.flush();
    if (!out) {
        throw IoError("error writing output file: " + path.string());
    }
}

} // namespace crmcast
