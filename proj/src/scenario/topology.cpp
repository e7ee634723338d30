#include "wsn/scenario/topology.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "wsn/mac/exchange.hpp"

namespace wsn::scenario {

double Topology::distance(NodeId a, NodeId b) const {
  const Node& na = nodes.at(a);
  const Node& nb = nodes.at(b);
  return std::hypot(na.x - nb.x, na.y - nb.y);
}

void Topology::validate() const {
  std::set<NodeId> ids;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& n = nodes[i];
    if (n.id != i) throw ScenarioError("node ids must be dense and match their index");
    if (!ids.insert(n.id).second) throw ScenarioError("duplicate node id " + std::to_string(n.id));
    if (!std::isfinite(n.x) || !std::isfinite(n.y)) {
      throw ScenarioError("node " + std::to_string(n.id) + " has a non-finite position");
    }
  }
}

std::uint64_t TrafficPlan::request_count() const {
  std::uint64_t n = 0;
  for (const auto& f : flows) n += f.count;
  return n;
}

std::uint64_t TrafficPlan::message_count() const {
  return request_count() * (echo_replies ? 2 : 1);
}

Topology build_mesh(std::uint32_t bc_count) {
  if (bc_count < 1) throw ScenarioError("bc_count must be >= 1");
  const auto columns = static_cast<std::uint32_t>(std::ceil(std::sqrt(static_cast<double>(bc_count))));
  const double pitch = kSquareSide + kSquareGap;
  Topology t;
  t.nodes.reserve(4u * bc_count);
  for (std::uint32_t k = 0; k < bc_count; ++k) {
    const double ox = (k % columns) * pitch;
    const double oy = (k / columns) * pitch;
    const std::array<std::pair<double, double>, 4> corners{
        {{0.0, 0.0}, {kSquareSide, 0.0}, {0.0, kSquareSide}, {kSquareSide, kSquareSide}}};
    for (const auto& [dx, dy] : corners) {
      t.nodes.push_back(Node{static_cast<NodeId>(t.nodes.size()), ox + dx, oy + dy});
    }
  }
  return t;
}

namespace {

void check_frequency(double f) {
  if (!(f > 0) || !std::isfinite(f)) throw ScenarioError("frequency must be > 0");
}

}  // namespace

energy::RadioPowerTable default_power_table(const std::string& profile) {
  return mac::profile_by_name(profile).standard == mac::Standard::Dot11b ? energy::hdg204_power_table()
                                                                         : energy::cc2420_power_table();
}

energy::RadioPowerTable PingScenario::power_table() const {
  return power ? *power : default_power_table(profile);
}

energy::RadioPowerTable MeshScenario::power_table() const {
  return power ? *power : default_power_table(profile);
}

void PingScenario::validate() const {
  const auto profile_spec = mac::profile_by_name(profile);
  if (payload_bytes < 10 || payload_bytes > 90 || payload_bytes % 10 != 0) {
    throw ScenarioError("payload must be one of 10, 20, ..., 90 bytes (got " + std::to_string(payload_bytes) + ")");
  }
  check_frequency(frequency_hz);
  if (!(duration_s >= 0) || !std::isfinite(duration_s)) throw ScenarioError("duration must be >= 0");
  if (!(distance_m > 0)) throw ScenarioError("distance must be > 0");
  power_table().validate();
  const SimTime period = sim::from_seconds(1.0 / frequency_hz);
  const SimTime round_trip = mac::worst_case_exchange(profile_spec, payload_bytes) * 2;
  if (round_trip >= period) {
    throw ScenarioError("echo exchange (" + std::to_string(sim::to_micros(round_trip)) +
                        " us) does not fit in the sending period");
  }
}

PingPlan build_ping_pair(const PingScenario& scenario) {
  scenario.validate();
  PingPlan plan;
  plan.topology.nodes = {Node{0, 0.0, 0.0}, Node{1, scenario.distance_m, 0.0}};
  const SimTime period = sim::from_seconds(1.0 / scenario.frequency_hz);
  const auto count = static_cast<std::uint64_t>(std::floor(scenario.duration_s * scenario.frequency_hz + 1e-9));
  plan.traffic.flows.push_back(PeriodicFlow{0, 1, SimTime{0}, period, count, scenario.payload_bytes});
  plan.traffic.echo_replies = true;
  plan.traffic.round_period = period;
  plan.traffic.rounds = count;
  return plan;
}

void MeshScenario::validate() const {
  mac::profile_by_name(profile);
  if (bc_count < 1) throw ScenarioError("bc_count must be >= 1");
  check_frequency(frequency_hz);
  if (rounds < 1) throw ScenarioError("rounds must be >= 1");
  if (payload_bytes == 0) throw ScenarioError("payload must be at least one byte");
  power_table().validate();
}

SimTime mesh_guard_gap(const std::string& profile, std::uint32_t payload_bytes) {
  return mac::worst_case_exchange(mac::profile_by_name(profile), payload_bytes) * 2;
}

TrafficPlan mesh_traffic_plan(const Topology& topology, std::uint32_t rounds, double frequency_hz,
                              const std::string& profile, std::uint32_t payload_bytes) {
  if (rounds < 1) throw ScenarioError("rounds must be >= 1");
  check_frequency(frequency_hz);
  const std::uint64_t n = topology.size();
  const SimTime guard = mesh_guard_gap(profile, payload_bytes);
  const std::uint64_t slots = n * (n - 1);
  TrafficPlan plan;
  plan.round_period = std::max(sim::from_seconds(1.0 / frequency_hz), guard * static_cast<std::int64_t>(slots));
  plan.rounds = rounds;
  plan.echo_replies = true;
  plan.flows.reserve(slots);
  std::uint64_t slot = 0;
  for (NodeId src = 0; src < n; ++src) {
    for (NodeId dst = 0; dst < n; ++dst) {
      if (dst == src) continue;
      plan.flows.push_back(PeriodicFlow{src, dst, guard * static_cast<std::int64_t>(slot), plan.round_period,
                                        rounds, payload_bytes});
      ++slot;
    }
  }
  return plan;
}

}  // namespace wsn::scenario
