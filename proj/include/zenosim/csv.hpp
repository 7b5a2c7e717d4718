#pragma once

// Plain-text outputs: trajectory and surface CSVs, key=value summaries.
// Numbers are written with 9 significant digits.

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "zenosim/sweep.hpp"

namespace zenosim {

std::string format_number(double v);

/// Throws OutputError if `path` exists and `force` is false.
void ensure_writable(const std::filesystem::path& path, bool force);

struct Column {
  std::string label;
  std::vector<double> values;
};

/// Header `<x_label>,<labels...>`, one row per x value.
void write_columns_csv(const std::filesystem::path& path, const std::string& x_label, const std::vector<double>& x,
                       const std::vector<Column>& columns, bool force);

/// Header `t_over_tf,<labels...>`.
void write_trajectory_csv(const std::filesystem::path& path, const std::vector<double>& t_over_tf,
                          const std::vector<Column>& columns, bool force);

/// Header `<outer>,<inner>,fidelity`, outer axis slow.
void write_surface_csv(const std::filesystem::path& path, const SweepResult& sweep, bool force);

using SummaryEntries = std::vector<std::pair<std::string, std::string>>;

void write_summary(const std::filesystem::path& path, const SummaryEntries& entries, bool force);

}  // namespace zenosim
