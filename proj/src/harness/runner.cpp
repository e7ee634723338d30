#include "wsn/harness/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include <unistd.h>

#include "wsn/harness/host_metrics.hpp"

namespace wsn::harness {

namespace {

// Radio activity that moves bits; idle listening, sleep and aux draw are not.
bool is_active(const std::string& category) {
  return category != "idle" && category != "sleep" && category != "aux";
}

void collect_energy(const Simulation& sim, bool with_rows, RunResult& result) {
  for (std::uint32_t n = 0; n < sim.node_count(); ++n) {
    const auto& ne = sim.node_energy(n);
    const auto& trace = ne.trace();
    const auto rep = energy::energy_report(trace, trace.bucket_width());

    NodeEnergyTotals totals;
    totals.node = n;
    for (std::uint32_t c = 0; c < rep.categories.size(); ++c) {
      const bool used = trace.category_dwell(c) > SimTime{0} || rep.category_totals[c] != 0.0;
      if (!used) continue;
      totals.categories.push_back({rep.categories[c], rep.category_totals[c]});
      totals.total_j += rep.category_totals[c];
      if (with_rows) {
        for (std::size_t b = 0; b < rep.buckets.size(); ++b) {
          result.report.energy_rows.push_back({n, rep.categories[c], b, rep.buckets[b][c]});
        }
      }
    }
    result.report.energy.push_back(std::move(totals));

    NodeSummary s;
    s.node = n;
    s.total_j = result.report.energy.back().total_j;
    s.model_consumed_j = ne.model_consumed_j();
    s.storage_drawn_j = ne.storage_drawn_j();
    s.intervals = rep.buckets.size();
    for (std::size_t b = 0; b < trace.bucket_count(); ++b) {
      for (std::uint32_t c = 0; c < trace.categories().size(); ++c) {
        if (!is_active(trace.categories()[c])) continue;
        s.initiator_active_j += trace.bucket_energy(b, c, energy::Role::Initiator);
      }
    }
    result.nodes.push_back(s);
  }
}

std::string default_run_id(const scenario::ScenarioConfig& cfg) {
  return cfg.name + "-s" + std::to_string(cfg.seed());
}

}  // namespace

RunResult run_scenario(const scenario::ScenarioConfig& config, const RunOptions& options) {
  scenario::ScenarioConfig cfg = config;
  if (options.seed) cfg.set_seed(*options.seed);
  if (options.model) cfg.model = *options.model;

  Simulation sim = Simulation::from_config(cfg);

  RunResult result;
  RunReport& r = result.report;
  r.run_id = options.run_id.empty() ? default_run_id(cfg) : options.run_id;
  r.scenario = cfg.name;
  r.protocol = cfg.profile();
  r.model = std::string(energy::to_string(cfg.model));
  r.payload_bytes = cfg.payload_bytes();
  r.freq_hz = cfg.frequency_hz();
  r.nodes = sim.node_count();
  r.sim_duration_s = sim::to_seconds(sim.duration());
  r.seed = cfg.seed();

  std::optional<HostSampler> sampler;
  if (options.sample_host) sampler.emplace(getpid(), options.sample_interval);
  const auto t0 = std::chrono::steady_clock::now();
  r.events = sim.run();
  const auto t1 = std::chrono::steady_clock::now();
  r.wall_ns = std::max<std::int64_t>(1, std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  if (sampler) {
    const HostMetrics m = sampler->stop();
    if (m.available) {
      r.cpu_avg_pct = m.cpu_avg_pct;
      r.cpu_max_pct = m.cpu_max_pct;
      r.peak_rss_bytes = m.peak_rss_bytes;
    }
  }
  result.stats = sim.stats();
  collect_energy(sim, options.energy_rows, result);
  return result;
}

RunResult run_scenario_file(const std::string& path, const RunOptions& options) {
  return run_scenario(scenario::load_scenario(path), options);
}

std::vector<RunReport> bench_scale(const std::vector<std::uint32_t>& bc_list, std::uint64_t seed,
                                   const BenchOptions& options) {
  if (bc_list.empty()) throw std::invalid_argument("bench-scale needs at least one BC count");
  std::vector<RunReport> reports;
  for (std::uint32_t bc : bc_list) {
    char id[32];
    std::snprintf(id, sizeof id, "bc-%04u", bc);
    try {
      scenario::MeshScenario mesh;
      mesh.profile = options.profile;
      mesh.bc_count = bc;
      mesh.frequency_hz = options.frequency_hz;
      mesh.rounds = options.rounds;
      mesh.payload_bytes = options.payload_bytes;
      mesh.seed = seed;
      mesh.validate();
      RunOptions ro;
      ro.run_id = id;
      ro.energy_rows = options.energy_rows;
      reports.push_back(run_scenario(scenario::make_mesh_config(mesh, options.model), ro).report);
    } catch (const std::exception& e) {
      RunReport failed;
      failed.run_id = id;
      failed.scenario = "mesh-bc" + std::to_string(bc);
      failed.protocol = options.profile;
      failed.model = std::string(energy::to_string(options.model));
      failed.payload_bytes = options.payload_bytes;
      failed.freq_hz = options.frequency_hz;
      failed.nodes = 4ull * bc;
      failed.seed = seed;
      failed.error = e.what();
      reports.push_back(std::move(failed));
    }
  }
  return reports;
}

std::vector<SweepGrid::Point> SweepGrid::points() const {
  std::vector<Point> out;
  for (const auto& p : protocols) {
    for (auto b : payloads) {
      for (double f : frequencies) out.push_back(Point{p, b, f});
    }
  }
  return out;
}

void SweepGrid::validate() const {
  if (protocols.empty() || payloads.empty() || frequencies.empty()) {
    throw std::invalid_argument("sweep grid axes must be non-empty");
  }
  for (const auto& p : protocols) mac::profile_by_name(p);
}

SweepResult sweep_energy(const SweepGrid& grid, std::uint64_t seed, const SweepOptions& options) {
  grid.validate();
  const auto points = grid.points();
  std::function<RunResult(std::size_t)> task = [&](std::size_t i) {
    const auto& pt = points[i];
    scenario::PingScenario ping;
    ping.profile = pt.protocol;
    ping.payload_bytes = pt.payload_bytes;
    ping.frequency_hz = pt.frequency_hz;
    ping.duration_s = options.duration_s;
    ping.seed = seed;
    auto cfg = scenario::make_ping_config(ping, options.model);
    const auto power = cfg.energy.power;
    cfg.energy = options.energy;
    cfg.energy.power = power;
    RunOptions ro;
    char id[32];
    std::snprintf(id, sizeof id, "sweep-%04zu", i + 1);
    ro.run_id = id;
    ro.sample_host = options.sample_host;
    return run_scenario(cfg, ro);
  };

  SweepResult out;
  out.runs = run_parallel<RunResult>(points.size(), options.jobs, task);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& run = out.runs[i];
    EnergyTableRow row;
    row.run_id = run.report.run_id;
    row.protocol = points[i].protocol;
    row.payload_bytes = points[i].payload_bytes;
    row.freq_hz = points[i].frequency_hz;
    row.model = run.report.model;
    row.intervals = run.nodes.at(0).intervals;
    const double n = row.intervals > 0 ? static_cast<double>(row.intervals) : 1.0;
    row.node0_interval_j = run.nodes.at(0).total_j / n;
    row.node1_interval_j = run.nodes.at(1).total_j / n;
    row.node0_sender_active_j = run.nodes.at(0).initiator_active_j / n;
    out.table.push_back(row);
  }
  return out;
}

std::string sweep_csv(const std::vector<EnergyTableRow>& rows) {
  std::string out = std::string(kSweepHeader) + "\n";
  for (const auto& r : rows) {
    out += r.run_id + "," + r.protocol + "," + std::to_string(r.payload_bytes) + "," + format_real(r.freq_hz) +
           "," + r.model + "," + std::to_string(r.intervals) + "," + format_energy(r.node0_interval_j) + "," +
           format_energy(r.node1_interval_j) + "," + format_energy(r.node0_sender_active_j) + "\n";
  }
  return out;
}

}  // namespace wsn::harness
