#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wsn/energy/binding.hpp"
#include "wsn/harness/report.hpp"
#include "wsn/harness/simulation.hpp"
#include "wsn/scenario/config.hpp"

namespace wsn::harness {

struct RunOptions {
  std::optional<std::uint64_t> seed;
  std::optional<energy::ModelKind> model;
  std::string run_id;  // defaults to "<name>-s<seed>"
  std::chrono::milliseconds sample_interval{100};
  bool sample_host = true;
  bool energy_rows = true;
};

/// Per-node energy figures beyond the CSV totals.
struct NodeSummary {
  std::uint32_t node = 0;
  double total_j = 0.0;           // trace total
  double model_consumed_j = 0.0;  // model's own accumulators
  double storage_drawn_j = 0.0;   // initial - residual (NaN without storage)
  double initiator_active_j = 0.0;  // tx/rx energy while initiating exchanges
  std::uint64_t intervals = 0;
};

struct RunResult {
  RunReport report;
  SimulationStats stats;
  std::vector<NodeSummary> nodes;
};

RunResult run_scenario(const scenario::ScenarioConfig& config, const RunOptions& options = {});
RunResult run_scenario_file(const std::string& path, const RunOptions& options = {});

/// Runs fn(0..count-1) on up to `jobs` threads. Results keep index order.
template <typename T>
std::vector<T> run_parallel(std::size_t count, unsigned jobs, const std::function<T(std::size_t)>& fn);

struct BenchOptions {
  std::string profile = "dot11b/ns2";
  std::uint32_t payload_bytes = 10;
  std::uint32_t rounds = 100;
  double frequency_hz = 1.0;
  energy::ModelKind model = energy::ModelKind::StateMachine;
  bool energy_rows = false;
};

/// One mesh run per BC count, sequentially (timings must not overlap).
/// A failed run is recorded with its error and the sweep continues.
std::vector<RunReport> bench_scale(const std::vector<std::uint32_t>& bc_list, std::uint64_t seed,
                                   const BenchOptions& options = {});

struct SweepGrid {
  std::vector<std::string> protocols{"dot11b/ns2", "dot154/default"};
  std::vector<std::uint32_t> payloads{10, 20, 30, 40, 50, 60, 70, 80, 90};
  std::vector<double> frequencies{0.1, 1.0, 2.0};

  struct Point {
    std::string protocol;
    std::uint32_t payload_bytes;
    double frequency_hz;
  };
  /// Cartesian product, protocol-major, then payload, then frequency.
  std::vector<Point> points() const;
  void validate() const;
};

struct SweepOptions {
  energy::ModelKind model = energy::ModelKind::StateMachine;
  energy::ModelParams energy;  // power table replaced per protocol
  double duration_s = 100.0;
  unsigned jobs = 1;
  bool sample_host = false;
};

struct EnergyTableRow {
  std::string run_id;
  std::string protocol;
  std::uint32_t payload_bytes = 0;
  double freq_hz = 0.0;
  std::string model;
  std::uint64_t intervals = 0;
  double node0_interval_j = 0.0;  // request sender
  double node1_interval_j = 0.0;  // replier
  double node0_sender_active_j = 0.0;  // per interval, while initiating the request exchange
};

struct SweepResult {
  std::vector<RunResult> runs;
  std::vector<EnergyTableRow> table;
};

inline constexpr const char* kSweepHeader =
    "run_id,protocol,payload_bytes,freq_hz,model,intervals,node0_interval_j,node1_interval_j,"
    "node0_sender_active_j";

SweepResult sweep_energy(const SweepGrid& grid, std::uint64_t seed, const SweepOptions& options = {});
std::string sweep_csv(const std::vector<EnergyTableRow>& rows);

}  // namespace wsn::harness

#include "wsn/harness/runner_impl.hpp"
