#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "wsn/energy/binding.hpp"
#include "wsn/medium/propagation.hpp"
#include "wsn/scenario/topology.hpp"

namespace wsn::scenario {

enum class ScenarioKind { Ping, Mesh };

std::string_view to_string(ScenarioKind kind);

/// A scenario file: one experiment plus the energy and medium settings it
/// runs with. See data/scenarios/ for examples.
struct ScenarioConfig {
  std::string name;
  ScenarioKind kind = ScenarioKind::Ping;
  PingScenario ping;
  MeshScenario mesh;
  energy::ModelKind model = energy::ModelKind::StateMachine;
  energy::ModelParams energy;  // power table resolved from the scenario
  medium::PathLossParams path_loss;
  double sensitivity_dbm = -85.0;

  const std::string& profile() const { return kind == ScenarioKind::Ping ? ping.profile : mesh.profile; }
  std::uint64_t seed() const { return kind == ScenarioKind::Ping ? ping.seed : mesh.seed; }
  void set_seed(std::uint64_t seed);
  std::uint32_t payload_bytes() const {
    return kind == ScenarioKind::Ping ? ping.payload_bytes : mesh.payload_bytes;
  }
  double frequency_hz() const { return kind == ScenarioKind::Ping ? ping.frequency_hz : mesh.frequency_hz; }
};

/// Thrown for unreadable files, malformed JSON (with line and column) and
/// schema violations (with the JSON pointer of the offending field).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ScenarioConfig parse_scenario(std::string_view text, std::string_view source = "<string>");
ScenarioConfig load_scenario(const std::filesystem::path& path);

/// Serialized form accepted by parse_scenario.
std::string to_json(const ScenarioConfig& config);

ScenarioConfig make_ping_config(const PingScenario& ping, energy::ModelKind model);
ScenarioConfig make_mesh_config(const MeshScenario& mesh, energy::ModelKind model);

}  // namespace wsn::scenario
