#include "zenosim/csv.hpp"

#include <cstdio>
#include <fstream>

#include "zenosim/errors.hpp"

namespace zenosim {

namespace fs = std::filesystem;

namespace {

std::ofstream open_output(const fs::path& path, bool force) {
  ensure_writable(path, force);
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw OutputError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw OutputError("cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw OutputError("write failed for " + path.string());
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void ensure_writable(const fs::path& path, bool force) {
  if (!force && fs::exists(path)) throw OutputError(path.string() + " exists (use --force to overwrite)");
}

void write_columns_csv(const fs::path& path, const std::string& x_label, const std::vector<double>& x,
                       const std::vector<Column>& columns, bool force) {
  for (const auto& c : columns)
    if (c.values.size() != x.size())
      throw DimensionError("column '" + c.label + "' has " + std::to_string(c.values.size()) + " rows, expected " +
                           std::to_string(x.size()));
  auto out = open_output(path, force);
  out << x_label;
  for (const auto& c : columns) out << ',' << c.label;
  out << '\n';
  for (std::size_t r = 0; r < x.size(); ++r) {
    out << format_number(x[r]);
    for (const auto& c : columns) out << ',' << format_number(c.values[r]);
    out << '\n';
  }
  finish(out, path);
}

void write_trajectory_csv(const fs::path& path, const std::vector<double>& t_over_tf,
                          const std::vector<Column>& columns, bool force) {
  write_columns_csv(path, "t_over_tf", t_over_tf, columns, force);
}

void write_surface_csv(const fs::path& path, const SweepResult& sweep, bool force) {
  auto out = open_output(path, force);
  out << sweep.outer.name << ',' << sweep.inner.name << ",fidelity\n";
  for (int i = 0; i < sweep.outer.count; ++i)
    for (int j = 0; j < sweep.inner.count; ++j)
      out << format_number(sweep.outer.value(i)) << ',' << format_number(sweep.inner.value(j)) << ','
          << format_number(sweep.at(i, j)) << '\n';
  finish(out, path);
}

void write_summary(const fs::path& path, const SummaryEntries& entries, bool force) {
  auto out = open_output(path, force);
  for (const auto& [k, v] : entries) out << k << '=' << v << '\n';
  finish(out, path);
}

}  // namespace zenosim
