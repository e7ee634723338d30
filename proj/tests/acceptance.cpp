// Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned below.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "wsn/evalkit/descriptor.hpp"
#include "wsn/harness/report.hpp"
#include "wsn/harness/runner.hpp"
#include "wsn/mac/exchange.hpp"
#include "wsn/mac/phy_profile.hpp"
#include "wsn/scenario/config.hpp"

using namespace wsn;
namespace fs = std::filesystem;

namespace {

constexpr double kAirtimeTolUs = 1.0;
constexpr double kOracleRelTol = 1e-9;
constexpr double kEquivRelTol = 1e-9;
constexpr double kGapMax = 0.05;
constexpr double kScaleR2 = 0.98;
constexpr double kScaleBudgetS = 600.0;

// Published airtimes (µs)
constexpr int kRtsTable = 207;
constexpr int kCtsTable[] = {202, 203};
constexpr std::uint32_t kDataPayloads[] = {10, 30, 50, 70, 90};
constexpr int kDataNs2[] = {239, 253, 268, 282, 297};
constexpr int kDataOmnet[] = {246, 261, 275, 290, 304};

// Closed-form oracle value from tests/oracles/energy_oracle.py
constexpr double kSenderActiveOracleJ = 4.2332358e-4;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

harness::RunOptions no_host() {
  harness::RunOptions o;
  o.sample_host = false;
  return o;
}

void report(int id, const char* name, const std::function<Outcome()>& check) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), s);
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double rel(double a, double b) { return b == 0.0 ? std::abs(a) : std::abs(a - b) / std::abs(b); }

harness::SweepResult sweep(const std::vector<std::string>& protocols, energy::ModelKind model,
                           energy::UnitMode mode = energy::UnitMode::PowerEnergy, unsigned jobs = 1,
                           std::vector<double> freqs = {0.1, 1.0, 2.0}) {
  harness::SweepGrid g;
  g.protocols = protocols;
  g.frequencies = std::move(freqs);
  harness::SweepOptions o;
  o.model = model;
  o.energy.unit_mode = mode;
  o.jobs = jobs;
  return harness::sweep_energy(g, 1, o);
}

Outcome control_frames() {
  const auto p = mac::profile_by_name("dot11b/ns2");
  const double rts = mac::compute_airtime_us(p, p.rts_bytes);
  const double cts = mac::compute_airtime_us(p, p.cts_bytes);
  const double ack = mac::compute_airtime_us(p, p.ack_bytes);
  bool ok = std::abs(mac::reported_airtime_us(rts) - kRtsTable) <= kAirtimeTolUs;
  for (int t : kCtsTable) {
    ok &= std::abs(mac::reported_airtime_us(cts) - t) <= kAirtimeTolUs;
    ok &= std::abs(mac::reported_airtime_us(ack) - t) <= kAirtimeTolUs;
  }
  return {ok, "RTS " + fmt("%.2f", rts) + " us vs 207, CTS/ACK " + fmt("%.2f", cts) + " us vs 202/203, tol +-1 us"};
}

// Every (overhead, rounding) pair in [1, 200] x {floor, round} that
// reproduces a column exactly.
std::vector<std::pair<int, std::string>> fit_overhead(const int* column) {
  std::vector<std::pair<int, std::string>> hits;
  const auto p = mac::profile_by_name("dot11b/ns2");
  for (int ov = 1; ov <= 200; ++ov) {
    for (const char* rule : {"floor", "round"}) {
      bool all = true;
      for (int i = 0; i < 5; ++i) {
        const double a = mac::compute_airtime_us(p, static_cast<std::uint32_t>(ov) + kDataPayloads[i]);
        const double v = std::string(rule) == "floor" ? std::floor(a) : std::floor(a + 0.5);
        all &= static_cast<int>(v) == column[i];
      }
      if (all) hits.emplace_back(ov, rule);
    }
  }
  return hits;
}

Outcome data_frames() {
  bool ok = true;
  double worst = 0;
  const struct {
    const char* profile;
    const int* column;
  } cols[] = {{"dot11b/ns2", kDataNs2}, {"dot11b/omnet", kDataOmnet}};
  std::string fits;
  for (const auto& c : cols) {
    const auto p = mac::profile_by_name(c.profile);
    for (int i = 0; i < 5; ++i) {
      const double a = mac::compute_airtime_us(p, p.overhead_bytes + kDataPayloads[i]);
      const double d = std::abs(static_cast<double>(mac::reported_airtime_us(a)) - c.column[i]);
      worst = std::max(worst, d);
      ok &= d <= kAirtimeTolUs;
    }
    // the preset must be the floor-rule fit
    const auto hits = fit_overhead(c.column);
    auto floor_fit = std::find_if(hits.begin(), hits.end(), [](const auto& h) { return h.second == "floor"; });
    ok &= floor_fit != hits.end() && static_cast<std::uint32_t>(floor_fit->first) == p.overhead_bytes;
    fits += std::string(" ") + c.profile + "=";
    for (const auto& [ov, rule] : hits) fits += std::to_string(ov) + "/" + rule + ";";
  }
  return {ok, "max |reported - table| = " + fmt("%.0f", worst) + " us (tol +-1); exact fits:" + fits};
}

Outcome profile_gap() {
  const auto ns2 = sweep({"dot11b/ns2"}, energy::ModelKind::StateMachine, energy::UnitMode::PowerEnergy, 1, {1.0});
  const auto omnet = sweep({"dot11b/omnet"}, energy::ModelKind::StateMachine, energy::UnitMode::PowerEnergy, 1, {1.0});
  bool ok = ns2.table.size() == 9 && omnet.table.size() == 9;
  double lo = 1, hi = -1;
  for (std::size_t i = 0; ok && i < ns2.table.size(); ++i) {
    const double gap = omnet.table[i].node0_interval_j / ns2.table[i].node0_interval_j - 1.0;
    lo = std::min(lo, gap);
    hi = std::max(hi, gap);
    ok &= gap > 0.0 && gap < kGapMax;
  }
  return {ok, "omnet/ns2 - 1 in [" + fmt("%.4f%%", lo * 100) + ", " + fmt("%.4f%%", hi * 100) + "] over 9 rows, need (0, 5%)"};
}

Outcome energy_oracle() {
  // closed form, from airtimes and the power table only
  const auto p = mac::profile_by_name("dot11b/ns2");
  auto ns = [&](std::uint32_t bytes) {
    return static_cast<double>(std::llround(mac::compute_airtime_us(p, bytes) * 1e3)) * 1e-9;
  };
  const double closed = 0.750 * (ns(20) + ns(65)) + 0.220 * (ns(14) + ns(14));

  scenario::PingScenario ping;
  const auto r = harness::run_scenario(scenario::make_ping_config(ping, energy::ModelKind::StateMachine),
                                       no_host());
  const double sim = r.nodes.at(0).initiator_active_j / static_cast<double>(r.nodes.at(0).intervals);
  const double e1 = rel(sim, kSenderActiveOracleJ), e2 = rel(closed, kSenderActiveOracleJ);
  return {e1 < kOracleRelTol && e2 < kOracleRelTol && r.nodes[0].intervals == 100,
          "sim " + fmt("%.9e", sim) + " J, oracle " + fmt("%.9e", kSenderActiveOracleJ) + " J, rel err " +
              fmt("%.2e", e1) + " (tol 1e-9)"};
}

Outcome model_equivalence() {
  const std::vector<std::string> protocols{"dot11b/ns2", "dot154/default"};
  const auto sm = sweep(protocols, energy::ModelKind::StateMachine);
  const auto hp = sweep(protocols, energy::ModelKind::Hierarchical, energy::UnitMode::PowerEnergy);
  const auto hq = sweep(protocols, energy::ModelKind::Hierarchical, energy::UnitMode::ChargeCurrent);
  bool ok = sm.runs.size() == 54 && hp.runs.size() == 54 && hq.runs.size() == 54;
  double worst_p = 0, worst_q = 0;
  for (std::size_t i = 0; ok && i < sm.runs.size(); ++i) {
    for (std::size_t n = 0; n < 2; ++n) {
      const double ref = sm.runs[i].nodes[n].total_j;
      worst_p = std::max({worst_p, rel(hp.runs[i].nodes[n].total_j, ref), rel(hp.runs[i].nodes[n].model_consumed_j, ref)});
      // charge mode integrates coulombs; model_consumed_j is Q * V
      worst_q = std::max({worst_q, rel(hq.runs[i].nodes[n].total_j, ref), rel(hq.runs[i].nodes[n].model_consumed_j, ref)});
    }
  }
  ok &= worst_p < kEquivRelTol && worst_q < kEquivRelTol;
  return {ok, "54 runs; power-mode max rel " + fmt("%.2e", worst_p) + ", charge-mode (E=QV) max rel " +
                  fmt("%.2e", worst_q) + " (tol 1e-9)"};
}

Outcome payload_independence() {
  auto run = [](std::uint32_t payload) {
    scenario::PingScenario p;
    p.payload_bytes = payload;
    return harness::run_scenario(scenario::make_ping_config(p, energy::ModelKind::ComponentAccounting),
                                 no_host());
  };
  const auto a = run(10), b = run(90);
  const bool counts = a.stats.exchanges == b.stats.exchanges && a.report.events == b.report.events;
  const bool equal = a.report.energy[0].total_j == b.report.energy[0].total_j &&
                     a.report.energy[1].total_j == b.report.energy[1].total_j;
  return {counts && equal, "10 B " + fmt("%.11e", a.report.energy[0].total_j) + " J vs 90 B " +
                               fmt("%.11e", b.report.energy[0].total_j) + " J, " +
                               std::to_string(a.stats.exchanges) + " exchanges each (exact equality)"};
}

Outcome symmetry() {
  const auto all = sweep({"dot11b/ns2", "dot11b/omnet", "dot154/default"}, energy::ModelKind::StateMachine);
  std::size_t equal = 0;
  for (const auto& r : all.runs) equal += r.report.energy[0].total_j == r.report.energy[1].total_j;
  return {equal == all.runs.size(),
          std::to_string(equal) + "/" + std::to_string(all.runs.size()) + " ping runs with sender == receiver total (exact)"};
}

Outcome scaling() {
  const std::vector<std::uint32_t> bcs{1, 2, 4, 8, 16, 32, 64, 128};
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = harness::bench_scale(bcs, 1);
  const double total_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  bool counts = reports.size() == bcs.size();
  std::vector<double> events, wall;
  for (std::size_t i = 0; counts && i < reports.size(); ++i) {
    const std::uint64_t n = 4ull * bcs[i];
    counts &= reports[i].ok() && reports[i].nodes == n && reports[i].events == 2 * 100 * n * (n - 1);
    events.push_back(static_cast<double>(reports[i].events));
    wall.push_back(static_cast<double>(reports[i].wall_ns));
  }
  const auto fit = harness::fit_linear(events, wall);

  const char* env = std::getenv("WSNBENCH_OUT_DIR");
  const fs::path out = env && *env ? fs::path(env) : fs::path("acceptance-out");
  harness::emit_csv(reports, out);
  harness::emit_report(reports, out / "report.txt");

  const bool ok = counts && fit.r_squared > kScaleR2 && total_s < kScaleBudgetS;
  return {ok, "4..512 nodes, event counts " + std::string(counts ? "match" : "MISMATCH") + " 2*rounds*N*(N-1), R^2 " +
                  fmt("%.5f", fit.r_squared) + " (need > 0.98), total " + fmt("%.1f", total_s) +
                  " s (budget 600 s), " + fmt("%.3f", fit.slope) + " ns/event; CSV in " + out.string()};
}

std::string energy_text(const harness::SweepResult& s) {
  std::vector<harness::RunReport> reports;
  for (const auto& r : s.runs) reports.push_back(r.report);
  return harness::energy_csv(reports);
}

Outcome determinism() {
  const std::vector<std::string> protocols{"dot11b/ns2", "dot154/default"};
  const auto a = energy_text(sweep(protocols, energy::ModelKind::StateMachine, energy::UnitMode::PowerEnergy, 1));
  const auto b = energy_text(sweep(protocols, energy::ModelKind::StateMachine, energy::UnitMode::PowerEnergy, 1));
  const auto c = energy_text(sweep(protocols, energy::ModelKind::StateMachine, energy::UnitMode::PowerEnergy, 4));

  bool files = true;
  for (const char* f : {"ping_dot154.json", "mesh_bc4.json", "ping_dot11b_omnet.json"}) {
    const auto path = std::string(WSN_DATA_DIR) + "/scenarios/" + f;
    for (std::uint64_t seed : {1ull, 99ull}) {
      harness::RunOptions o = no_host();
      o.seed = seed;
      const auto x = harness::run_scenario_file(path, o), y = harness::run_scenario_file(path, o);
      files &= harness::energy_csv({x.report}) == harness::energy_csv({y.report});
    }
  }
  const bool ok = a == b && a == c && files;
  return {ok, "54-run sweep energy.csv (" + std::to_string(a.size()) + " bytes) identical for two runs and pools 1/4; "
              "3 scenario files x 2 seeds identical: " + (files ? "yes" : "no")};
}

Outcome table_fixture() {
  const std::string dir = std::string(WSN_DATA_DIR) + "/descriptors/";
  const auto t = evalkit::comparison_table({evalkit::load_descriptor(dir + "tossim.json"),
                                            evalkit::load_descriptor(dir + "ns2.json"),
                                            evalkit::load_descriptor(dir + "omnetpp.json")});
  const char* sims[] = {"TOSSIM", "NS2", "OMNeT++/INET"};
  // exact cells
  const struct {
    const char* criterion;
    const char* cells[3];
  } exact[] = {
      {"Nature of the simulator", {"Emulator", "Simulator", "Simulator"}},
      {"Type of the simulator", {"discrete-event", "discrete-event", "discrete-event"}},
      {"License", {"BSD-license", "GNU GPLv2 license", "Academic Public License. INET models under LGPL or GPL."}},
      {"Supported platforms", {"Linux and Windows", "Linux, MacOS and FreeBSD", "Windows, Linux and Mac OSX"}},
      {"Heterogeneity", {"No", "No", "Yes"}},
      {"Design philosophy", {"single-level", "single-level", "single-level"}},
      {"Modelling", {"Available", "Available", "Available"}},
      {"Mobility model", {"Yes, through MOB-TOSSIM", "Yes", "Yes"}},
      {"Energy model",
       {"Battery model: No RF states: Yes Limitations: Cannot model energy harvester units",
        "Battery model: Only for Ideal Battery RF states: Yes Limitations: Cannot model sensing and processing units",
        "Battery model: Yes RF states: Yes Limitations: Cannot model sensing and processing units"}},
  };
  // prose cells: required fragments
  const struct {
    const char* criterion;
    std::vector<std::string> fragments[3];
  } prose[] = {
      {"User Interface", {{"TinyViz", "Python", "C++", "NesC"}, {"Nam", "C++", "OTcl"}, {"built-in", "C++", "NED"}}},
      {"Wireless medium model",
       {{"lognormal shadowing", "noise modelling"},
        {"shadowing", "2-ray ground", "free space"},
        {"free-space", "log-normal shadowing", "rayleigh fading", "2-ray ground", "rician fading", "nakagami fading",
         "Background noise", "obstacle loss"}}},
      {"Supported technology and protocols",
       {{"entire TinyOS applications"},
        {"Application Layer", "telnet", "SCTP", "IPv6", "802.11b", "802.15.4", "Satellite Aloha", "OLSR"},
        {"BitTorrent", "RTCP", "MIPv6", "802.11p", "LTE", "GPSR"}}},
  };
  int checked = 0, bad = 0;
  std::string first_bad;
  for (const auto& e : exact) {
    for (int s = 0; s < 3; ++s) {
      ++checked;
      if (t.cell(e.criterion, sims[s]) != e.cells[s]) {
        ++bad;
        if (first_bad.empty()) first_bad = std::string(e.criterion) + "/" + sims[s];
      }
    }
  }
  for (const auto& p : prose) {
    for (int s = 0; s < 3; ++s) {
      for (const auto& frag : p.fragments[s]) {
        ++checked;
        if (t.cell(p.criterion, sims[s]).find(frag) == std::string::npos) {
          ++bad;
          if (first_bad.empty()) first_bad = std::string(p.criterion) + "/" + sims[s] + " '" + frag + "'";
        }
      }
    }
  }
  const bool order = t.criteria == evalkit::criteria() && t.criteria.size() == 12;
  return {bad == 0 && order, std::to_string(checked - bad) + "/" + std::to_string(checked) +
                                 " cell checks match, 12 criteria in order" +
                                 (first_bad.empty() ? "" : ", first mismatch: " + first_bad)};
}

}  // namespace

int main() {
  report(1, "airtime-control-frames", control_frames);
  report(2, "airtime-data-frames", data_frames);
  report(3, "inter-profile-energy-gap", profile_gap);
  report(4, "energy-oracle", energy_oracle);
  report(5, "model-equivalence", model_equivalence);
  report(6, "component-payload-independence", payload_independence);
  report(7, "sender-receiver-symmetry", symmetry);
  report(8, "scaling", scaling);
  report(9, "determinism", determinism);
  report(10, "descriptor-table-fixture", table_fixture);
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures;
}
