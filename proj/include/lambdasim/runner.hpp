#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lambdasim/config.hpp"

namespace lambdasim {

struct RunOutputs {
  std::vector<std::string> files;  // paths relative to the output directory
  double wall_ms = 0.0;
};

/// Executes a run: builds the scenario(s), evolves, derives signals and
/// fits, and writes traces plus a manifest under out_dir. Trace files
/// are byte-identical across reruns of the same config; only the
/// manifest carries timing. Throws on I/O failure or invariant breach.
RunOutputs run(const RunConfig& config, const std::filesystem::path& out_dir);

/// Columnar table with full-precision (17 significant digit) values,
/// written as CSV or as a JSON object of column arrays.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void write_table(const Table& table, const std::filesystem::path& path,
                 RunConfig::OutputFormat format);

/// Reads a table written by write_table (CSV form) or any CSV with a
/// header row of column names.
Table read_csv(const std::filesystem::path& path);

inline constexpr const char* kVersion = "1.0.0";

}  // namespace lambdasim
