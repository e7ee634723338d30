// wsnbench: run WSN scenarios, sweep energy grids, time scaling runs and
// compare simulator descriptors.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wsn/evalkit/descriptor.hpp"
#include "wsn/harness/runner.hpp"

namespace fs = std::filesystem;
using namespace wsn;

namespace {

constexpr const char* kOutEnv = "WSNBENCH_OUT_DIR";

// --out wins, then the environment, then the default.
fs::path output_dir(const std::string& flag, const char* fallback) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kOutEnv); env && *env) return env;
  return fallback;
}

void write_outputs(const std::vector<harness::RunReport>& reports, const fs::path& dir) {
  harness::emit_csv(reports, dir);
  harness::emit_report(reports, dir / "report.txt");
  std::cout << "wrote " << (dir / "runs.csv").string() << ", " << (dir / "energy.csv").string() << ", "
            << (dir / "report.txt").string() << "\n";
}

energy::ModelKind parse_model(const std::string& name) { return energy::model_kind_from_string(name); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic WSN simulation and benchmarking harness"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Run one scenario file");
  std::string scenario_file;
  std::optional<std::uint64_t> run_seed;
  std::string run_model;
  std::string run_out;
  run->add_option("scenario", scenario_file, "Scenario JSON file")->required()->check(CLI::ExistingFile);
  run->add_option("--seed", run_seed, "Override the scenario seed");
  run->add_option("--model", run_model, "Energy model")->check(CLI::IsMember({"sm", "hier", "comp"}));
  run->add_option("--out", run_out, "Output directory");

  // bench-scale
  auto* bench = app.add_subcommand("bench-scale", "Mesh scaling runs, one per BC count");
  std::vector<std::uint32_t> bc_list{1, 2, 4, 8, 16, 32, 64, 128};
  std::uint64_t bench_seed = 1;
  harness::BenchOptions bench_opts;
  std::string bench_model = "sm";
  std::string bench_out;
  bench->add_option("--bc", bc_list, "Comma-separated BC counts")->delimiter(',')->capture_default_str();
  bench->add_option("--seed", bench_seed)->capture_default_str();
  bench->add_option("--protocol", bench_opts.profile)->capture_default_str();
  bench->add_option("--rounds", bench_opts.rounds)->capture_default_str();
  bench->add_option("--model", bench_model)->check(CLI::IsMember({"sm", "hier", "comp"}));
  bench->add_flag("--energy-rows", bench_opts.energy_rows, "Also emit per-interval energy rows");
  bench->add_option("--out", bench_out, "Output directory");

  // sweep-energy
  auto* sweep = app.add_subcommand("sweep-energy", "Ping-pair energy sweep over protocol x payload x frequency");
  harness::SweepGrid grid;
  harness::SweepOptions sweep_opts;
  std::uint64_t sweep_seed = 1;
  std::string sweep_model = "sm";
  std::string sweep_out;
  sweep->add_option("--protocols", grid.protocols)->delimiter(',')->capture_default_str();
  sweep->add_option("--payloads", grid.payloads)->delimiter(',')->capture_default_str();
  sweep->add_option("--freqs", grid.frequencies)->delimiter(',')->capture_default_str();
  sweep->add_option("--model", sweep_model)->check(CLI::IsMember({"sm", "hier", "comp"}));
  sweep->add_option("--duration", sweep_opts.duration_s, "Seconds per run")->capture_default_str();
  sweep->add_option("--jobs", sweep_opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sweep_seed)->capture_default_str();
  sweep->add_option("--out", sweep_out, "Output directory");

  // report
  auto* report = app.add_subcommand("report", "Render report.txt from runs.csv/energy.csv");
  std::string report_dir;
  report->add_option("dir", report_dir)->required()->check(CLI::ExistingDirectory);

  // describe
  auto* describe = app.add_subcommand("describe", "Simulator descriptors");
  describe->require_subcommand(1);
  auto* validate = describe->add_subcommand("validate", "Check one descriptor file");
  std::string descriptor_file;
  validate->add_option("file", descriptor_file)->required();
  auto* compare = describe->add_subcommand("compare", "Criteria matrix over two or more descriptors");
  std::vector<std::string> descriptor_files;
  std::string compare_out;
  compare->add_option("files", descriptor_files)->required();
  compare->add_option("--out", compare_out, "Write the matrix here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      harness::RunOptions opts;
      opts.seed = run_seed;
      if (!run_model.empty()) opts.model = parse_model(run_model);
      const auto result = harness::run_scenario_file(scenario_file, opts);
      std::cout << result.report.run_id << ": " << result.report.events << " events, "
                << result.report.wall_ms() << " ms\n";
      write_outputs({result.report}, output_dir(run_out, "wsnbench-out"));
    } else if (*bench) {
      bench_opts.model = parse_model(bench_model);
      const auto reports = harness::bench_scale(bc_list, bench_seed, bench_opts);
      int failed = 0;
      for (const auto& r : reports) {
        if (!r.ok()) {
          ++failed;
          std::cerr << r.run_id << ": " << r.error << "\n";
        } else {
          std::cout << r.run_id << ": " << r.nodes << " nodes, " << r.events << " events, " << r.wall_ms()
                    << " ms\n";
        }
      }
      write_outputs(reports, output_dir(bench_out, "wsnbench-out"));
      if (failed) return 1;
    } else if (*sweep) {
      sweep_opts.model = parse_model(sweep_model);
      const auto result = harness::sweep_energy(grid, sweep_seed, sweep_opts);
      std::vector<harness::RunReport> reports;
      for (const auto& r : result.runs) reports.push_back(r.report);
      const fs::path dir = output_dir(sweep_out, "wsnbench-out");
      write_outputs(reports, dir);
      harness::write_file(dir / "sweep.csv", harness::sweep_csv(result.table));
      std::cout << harness::sweep_csv(result.table);
    } else if (*report) {
      const std::string text = harness::report_from_directory(report_dir);
      harness::write_file(fs::path(report_dir) / "report.txt", text);
      std::cout << text;
    } else if (*validate) {
      const auto d = evalkit::load_descriptor(descriptor_file);
      std::cout << descriptor_file << ": ok (" << d.name << ")\n";
    } else if (*compare) {
      std::vector<evalkit::SimulatorDescriptor> ds;
      for (const auto& f : descriptor_files) ds.push_back(evalkit::load_descriptor(f));
      const std::string md = evalkit::comparison_table(ds).to_markdown();
      if (compare_out.empty()) {
        std::cout << md;
      } else {
        harness::write_file(compare_out, md);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "wsnbench: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
