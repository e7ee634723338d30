#pragma once

#include <memory>
#include <optional>
#include <string_view>

#include "wsn/energy/component_accounting.hpp"
#include "wsn/energy/hierarchical.hpp"
#include "wsn/energy/power_table.hpp"
#include "wsn/energy/state_machine.hpp"
#include "wsn/energy/trace.hpp"
#include "wsn/sim/engine.hpp"

namespace wsn::energy {

enum class ModelKind { StateMachine, Hierarchical, ComponentAccounting };

/// "sm", "hier", "comp"
std::string_view to_string(ModelKind kind);
ModelKind model_kind_from_string(std::string_view name);

struct ModelParams {
  RadioPowerTable power;
  double initial_energy_j = 1000.0;
  double aux_power_w = 0.0;

  // Hierarchical only. Capacity defaults to the initial energy (power-energy)
  // or initial energy / voltage (charge-current).
  UnitMode unit_mode = UnitMode::PowerEnergy;
  double nominal_voltage_v = 3.0;
  double regulator_efficiency = 1.0;
  std::optional<double> capacity;
  /// Constant harvester supply (W or A). Rejected by the other model kinds.
  std::optional<double> harvester;

  // ComponentAccounting only.
  ActivityCostTable activity_costs = ActivityCostTable::defaults();
};

/// One node's energy model, driven by radio activity.
///
/// Time-based models (state machine, hierarchical) react to `enter`; the
/// component-accounting model reacts to `frame`. Both are always called so
/// the driver does not depend on the model kind.
class NodeEnergy {
 public:
  virtual ~NodeEnergy() = default;

  virtual ModelKind kind() const = 0;
  /// Radio switches to `state` at `at`; the dwell in the previous state is charged.
  virtual void enter(RadioState state, SimTime at, Role role) = 0;
  /// One frame sent or received, ending at `at`.
  virtual void frame(bool sent, SimTime at, Role role) = 0;
  /// Charges the final dwell and closes the trace.
  virtual void close(SimTime end) = 0;
  virtual bool depleted() const = 0;
  /// Energy consumed according to the model's own accumulators, in joules.
  virtual double model_consumed_j() const = 0;
  /// Initial minus residual energy in joules (NaN for models without storage).
  virtual double storage_drawn_j() const = 0;

  sim::NodeId node() const { return node_; }
  const EnergyTrace& trace() const { return trace_; }

 protected:
  NodeEnergy(sim::NodeId node, EnergyTrace trace) : node_(node), trace_(std::move(trace)) {}

  sim::NodeId node_;
  EnergyTrace trace_;
};

/// Binds a model of the given kind to a node. `bucket_width` is the
/// resolution of the node's energy trace.
std::unique_ptr<NodeEnergy> attach_model(sim::NodeId node, ModelKind kind, const ModelParams& params,
                                         SimTime bucket_width, bool keep_entries = false);

}  // namespace wsn::energy
