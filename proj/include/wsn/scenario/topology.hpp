#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsn/energy/power_table.hpp"
#include "wsn/sim/engine.hpp"
#include "wsn/sim/time.hpp"

namespace wsn::scenario {

using sim::NodeId;
using sim::SimTime;

class ScenarioError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Node {
  NodeId id = 0;
  double x = 0.0;
  double y = 0.0;
};

struct Topology {
  std::vector<Node> nodes;

  std::size_t size() const { return nodes.size(); }
  double distance(NodeId a, NodeId b) const;
  void validate() const;
};

/// Periodic echo requests from one node to another. Occurrence k is sent at
/// first + k * period.
struct PeriodicFlow {
  NodeId source = 0;
  NodeId destination = 0;
  SimTime first{0};
  SimTime period{0};
  std::uint64_t count = 0;
  std::uint32_t payload_bytes = 0;
};

struct TrafficPlan {
  std::vector<PeriodicFlow> flows;
  bool echo_replies = true;
  /// Time between consecutive rounds; also the energy reporting interval.
  SimTime round_period{0};
  std::uint64_t rounds = 0;

  std::uint64_t request_count() const;
  /// Requests plus replies.
  std::uint64_t message_count() const;
};

/// HDG204 for 802.11b profiles, CC2420 for 802.15.4.
energy::RadioPowerTable default_power_table(const std::string& profile);

inline constexpr double kSquareSide = 10.0;  // m
inline constexpr double kSquareGap = 10.0;   // m between adjacent squares

/// bc_count 10 m squares tiled row-major on a ceil(sqrt(bc_count))-wide grid,
/// 10 m apart, with a node on each vertex.
Topology build_mesh(std::uint32_t bc_count);

struct PingScenario {
  std::string profile = "dot11b/ns2";
  std::uint32_t payload_bytes = 10;
  double frequency_hz = 1.0;
  double duration_s = 100.0;
  double distance_m = 10.0;
  /// Defaults to the module for the profile's standard.
  std::optional<energy::RadioPowerTable> power;
  std::uint64_t seed = 1;

  energy::RadioPowerTable power_table() const;
  void validate() const;
};

struct PingPlan {
  Topology topology;
  TrafficPlan traffic;
};

/// Node 0 at (0, 0) sends an echo request every 1/frequency seconds to node 1
/// at (distance, 0), which replies with a message of the same length.
PingPlan build_ping_pair(const PingScenario& scenario);

struct MeshScenario {
  std::string profile = "dot11b/ns2";
  std::uint32_t bc_count = 1;
  double frequency_hz = 1.0;
  std::uint32_t rounds = 100;
  std::uint32_t payload_bytes = 10;
  std::optional<energy::RadioPowerTable> power;
  std::uint64_t seed = 1;

  energy::RadioPowerTable power_table() const;
  std::size_t node_count() const { return 4u * bc_count; }
  void validate() const;
};

/// Guard gap between consecutive request slots: twice the worst-case
/// exchange, so each slot holds a request and its reply.
SimTime mesh_guard_gap(const std::string& profile, std::uint32_t payload_bytes);

/// Every round, every node sends one echo request to every other node. Slots
/// are laid out sender by sender (sender i owns slots i*(N-1) .. i*(N-1)+N-2),
/// one guard gap apart. The round period is max(1/frequency, N(N-1) * guard).
TrafficPlan mesh_traffic_plan(const Topology& topology, std::uint32_t rounds, double frequency_hz,
                              const std::string& profile, std::uint32_t payload_bytes);

}  // namespace wsn::scenario
