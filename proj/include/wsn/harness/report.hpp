#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace wsn::harness {

struct CategoryEnergy {
  std::string category;
  double joules = 0.0;
};

struct NodeEnergyTotals {
  std::uint32_t node = 0;
  std::vector<CategoryEnergy> categories;
  double total_j = 0.0;
};

/// One energy.csv row.
struct EnergyRow {
  std::uint32_t node = 0;
  std::string category;
  std::uint64_t interval = 0;
  double joules = 0.0;
};

struct RunReport {
  std::string run_id;
  std::string scenario;
  std::string protocol;
  std::string model;
  std::uint32_t payload_bytes = 0;
  double freq_hz = 0.0;
  std::uint64_t nodes = 0;
  double sim_duration_s = 0.0;
  std::int64_t wall_ns = 0;
  std::optional<std::uint64_t> peak_rss_bytes;
  std::optional<double> cpu_avg_pct;
  std::optional<double> cpu_max_pct;
  std::uint64_t events = 0;
  std::uint64_t seed = 0;
  std::vector<NodeEnergyTotals> energy;
  std::vector<EnergyRow> energy_rows;
  std::string error;  // non-empty when the run failed

  bool ok() const { return error.empty(); }
  double wall_ms() const { return static_cast<double>(wall_ns) * 1e-6; }
};

inline constexpr const char* kRunsHeader =
    "run_id,scenario,protocol,payload_bytes,freq_hz,nodes,sim_duration_s,wall_ms,peak_rss_bytes,"
    "cpu_avg_pct,cpu_max_pct,events,seed";
inline constexpr const char* kEnergyHeader = "run_id,node_id,model,category,interval_index,energy_j";

/// Energy values: 12 significant digits in fixed exponent form.
std::string format_energy(double joules);
/// Other reals: shortest of %.12g.
std::string format_real(double value);

std::string runs_csv(const std::vector<RunReport>& reports);
std::string energy_csv(const std::vector<RunReport>& reports);

/// Writes runs.csv and energy.csv into `dir` (created if missing).
void emit_csv(const std::vector<RunReport>& reports, const std::filesystem::path& dir);

/// Human-readable tables plus gnuplot-ready blocks, built from the two CSVs.
std::string render_report(const std::string& runs_csv_text, const std::string& energy_csv_text);

/// Writes report.txt from in-memory reports.
void emit_report(const std::vector<RunReport>& reports, const std::filesystem::path& path);

/// Reads runs.csv (and energy.csv, if present) from `dir` and renders the report.
std::string report_from_directory(const std::filesystem::path& dir);

void write_file(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares of y on x.
LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace wsn::harness
