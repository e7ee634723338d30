#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "wsn/energy/binding.hpp"
#include "wsn/mac/exchange.hpp"
#include "wsn/medium/propagation.hpp"
#include "wsn/scenario/config.hpp"
#include "wsn/sim/engine.hpp"
#include "wsn/sim/rng.hpp"

namespace wsn::harness {

using sim::NodeId;
using sim::SimTime;

struct SimulationStats {
  std::uint64_t requests_sent = 0;
  std::uint64_t replies_sent = 0;
  std::uint64_t exchanges = 0;
  std::uint64_t deferred = 0;        // exchanges that waited for a busy medium or node
  std::uint64_t dropped_range = 0;   // destination out of range
  std::uint64_t dropped_energy = 0;  // an endpoint was depleted
  std::uint64_t dropped_retries = 0;
};

/// A built scenario bound to an engine, ready to run once.
///
/// Each application message is one engine event. Processing it expands the
/// message into a MAC exchange timeline and drives both endpoints' energy
/// models through it; the medium and both nodes are then reserved until the
/// exchange ends. Replies are scheduled at the end of the request exchange.
class Simulation {
 public:
  Simulation(scenario::Topology topology, scenario::TrafficPlan traffic, mac::PhyProfile profile,
             energy::ModelKind model, const energy::ModelParams& params, medium::PathLossParams path_loss,
             double sensitivity_w, std::uint64_t seed, SimTime duration, bool keep_entries = false);

  static Simulation from_config(const scenario::ScenarioConfig& config, bool keep_entries = false);

  /// Runs to the end of the scenario and closes every energy trace.
  std::uint64_t run();

  sim::Engine& engine() { return engine_; }
  const scenario::Topology& topology() const { return topology_; }
  const scenario::TrafficPlan& traffic() const { return traffic_; }
  const mac::PhyProfile& profile() const { return profile_; }
  SimTime duration() const { return duration_; }
  SimTime end_time() const { return end_time_; }
  const SimulationStats& stats() const { return stats_; }
  const energy::NodeEnergy& node_energy(NodeId node) const { return *energy_.at(node); }
  std::size_t node_count() const { return energy_.size(); }
  energy::ModelKind model() const { return model_; }

 private:
  struct CachedExchange {
    SimTime total{0};
    std::vector<mac::ActivitySpan> sender;
    std::vector<mac::ActivitySpan> receiver;
    struct Frame {
      SimTime end{0};
      bool by_sender = true;
    };
    std::vector<Frame> frames;
  };

  void handle(sim::Engine& engine, const sim::Event& event);
  const CachedExchange& exchange_for(std::uint32_t payload, std::uint32_t attempt, std::uint64_t slots);
  bool reachable(NodeId from, NodeId to) const;
  void drive(NodeId node, const std::vector<mac::ActivitySpan>& spans, SimTime start, SimTime total,
             energy::Role role);

  scenario::Topology topology_;
  scenario::TrafficPlan traffic_;
  mac::PhyProfile profile_;
  energy::ModelKind model_;
  medium::PathLossParams path_loss_;
  double sensitivity_w_;
  double tx_power_w_;
  medium::ShadowingField shadowing_;
  SimTime duration_;
  SimTime end_time_{0};
  bool ran_ = false;

  sim::Engine engine_;
  std::vector<sim::RngStream> rng_;
  std::vector<std::unique_ptr<energy::NodeEnergy>> energy_;
  std::vector<SimTime> node_busy_until_;
  SimTime medium_busy_until_{0};
  std::vector<std::uint64_t> flow_sent_;
  std::unordered_map<std::uint64_t, CachedExchange> cache_;
  SimulationStats stats_;
};

}  // namespace wsn::harness
