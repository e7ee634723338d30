#include "wsn/energy/binding.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace wsn::energy {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::StateMachine: return "sm";
    case ModelKind::Hierarchical: return "hier";
    case ModelKind::ComponentAccounting: return "comp";
  }
  return "unknown";
}

ModelKind model_kind_from_string(std::string_view name) {
  if (name == "sm") return ModelKind::StateMachine;
  if (name == "hier") return ModelKind::Hierarchical;
  if (name == "comp") return ModelKind::ComponentAccounting;
  throw EnergyError("unknown energy model '" + std::string(name) + "' (expected sm, hier or comp)");
}

namespace {

std::array<std::uint32_t, 4> register_states(EnergyTrace& trace) {
  std::array<std::uint32_t, 4> ids{};
  for (RadioState s : kRadioStates) ids[static_cast<std::size_t>(s)] = trace.category(to_string(s));
  return ids;
}

class StateMachineBinding final : public NodeEnergy {
 public:
  StateMachineBinding(sim::NodeId node, const ModelParams& p, EnergyTrace trace)
      : NodeEnergy(node, std::move(trace)), model_(p.power, p.initial_energy_j, SimTime{0}, p.aux_power_w) {
    state_ids_ = register_states(trace_);
    if (p.aux_power_w > 0) aux_id_ = trace_.category("aux");
  }

  ModelKind kind() const override { return ModelKind::StateMachine; }

  void enter(RadioState state, SimTime at, Role role) override {
    charge_until(at);
    model_.transition(state, at);
    role_ = role;
  }

  void frame(bool, SimTime, Role) override {}

  void close(SimTime end) override {
    if (end > model_.state_entry_time()) {
      charge_until(end);
      model_.transition(model_.state(), end);
    }
    trace_.close(end);
  }

  bool depleted() const override { return model_.depleted(); }
  double model_consumed_j() const override { return model_.total_consumed(); }
  double storage_drawn_j() const override { return model_.initial_energy() - model_.residual(); }

 private:
  // Records the dwell that the next transition will charge.
  void charge_until(SimTime at) {
    if (model_.depleted()) return;
    const SimTime from = model_.state_entry_time();
    const RadioState s = model_.state();
    const double radio_w = model_.power_table().power(s);
    const double total_w = radio_w + model_.aux_power();
    SimTime to = at;
    if (total_w * sim::to_seconds(at - from) > model_.residual()) {
      to = std::min(at, from + sim::from_seconds(model_.residual() / total_w));
    }
    const Role role = s == RadioState::Idle || s == RadioState::Sleep ? Role::None : role_;
    trace_.add_dwell(state_ids_[static_cast<std::size_t>(s)], from, to, radio_w, role);
    if (aux_id_) trace_.add_dwell(*aux_id_, from, to, model_.aux_power());
  }

  StateMachineModel model_;
  std::array<std::uint32_t, 4> state_ids_{};
  std::optional<std::uint32_t> aux_id_;
  Role role_ = Role::None;
};

class HierarchicalBinding final : public NodeEnergy {
 public:
  HierarchicalBinding(sim::NodeId node, const ModelParams& p, EnergyTrace trace, HierarchicalModel model)
      : NodeEnergy(node, std::move(trace)), model_(std::move(model)), power_(p.power), aux_w_(p.aux_power_w) {
    state_ids_ = register_states(trace_);
    if (aux_w_ > 0) aux_id_ = trace_.category("aux");
    // Flows are in amperes in charge-current mode.
    to_flow_ = model_.unit_mode() == UnitMode::ChargeCurrent ? 1.0 / p.nominal_voltage_v : 1.0;
    model_.set_consumer("radio", power_.power(state_) * to_flow_);
    model_.set_consumer("aux", aux_w_ * to_flow_);
    if (p.harvester) model_.set_generator("harvester", *p.harvester);
  }

  ModelKind kind() const override { return ModelKind::Hierarchical; }

  void enter(RadioState state, SimTime at, Role role) override {
    advance(at);
    state_ = state;
    role_ = role;
    model_.set_consumer("radio", power_.power(state_) * to_flow_);
  }

  void frame(bool, SimTime, Role) override {}

  void close(SimTime end) override {
    if (end > last_) advance(end);
    trace_.close(end);
  }

  bool depleted() const override { return model_.depleted(); }

  double model_consumed_j() const override {
    const double v = model_.nominal_voltage().value_or(1.0);
    return model_.consumed() * v;
  }

  double storage_drawn_j() const override {
    const double v = model_.nominal_voltage().value_or(1.0);
    return (model_.initial() - model_.residual()) * v;
  }

 private:
  void advance(SimTime at) {
    if (at < last_) throw EnergyError("hierarchical model stepped backwards in time");
    const bool was_depleted = model_.depleted();
    const double started = model_.elapsed();
    model_.step(sim::to_seconds(at - last_));
    if (!was_depleted) {
      SimTime to = at;
      if (model_.depleted()) to = last_ + sim::from_seconds(*model_.depletion_time() - started);
      if (to > at) to = at;
      const double eff = model_.efficiency();
      const Role role = state_ == RadioState::Idle || state_ == RadioState::Sleep ? Role::None : role_;
      trace_.add_dwell(state_ids_[static_cast<std::size_t>(state_)], last_, to,
                       power_.power(state_) * to_flow_ / eff, role);
      if (aux_id_) trace_.add_dwell(*aux_id_, last_, to, aux_w_ * to_flow_ / eff);
    }
    last_ = at;
  }

  HierarchicalModel model_;
  RadioPowerTable power_;
  double aux_w_;
  double to_flow_ = 1.0;
  RadioState state_ = RadioState::Idle;
  Role role_ = Role::None;
  SimTime last_{0};
  std::array<std::uint32_t, 4> state_ids_{};
  std::optional<std::uint32_t> aux_id_;
};

class ComponentBinding final : public NodeEnergy {
 public:
  ComponentBinding(sim::NodeId node, const ModelParams& p, EnergyTrace trace)
      : NodeEnergy(node, std::move(trace)), model_(p.activity_costs) {
    send_id_ = trace_.category(to_string(ComponentActivity::RadioSend));
    receive_id_ = trace_.category(to_string(ComponentActivity::RadioReceive));
  }

  ModelKind kind() const override { return ModelKind::ComponentAccounting; }

  void enter(RadioState, SimTime, Role) override {}

  void frame(bool sent, SimTime at, Role role) override {
    const auto activity = sent ? ComponentActivity::RadioSend : ComponentActivity::RadioReceive;
    const double j = model_.charge(activity, 1);
    trace_.add_amount(sent ? send_id_ : receive_id_, at, j, role);
  }

  void close(SimTime end) override { trace_.close(end); }
  bool depleted() const override { return false; }
  double model_consumed_j() const override { return model_.total(); }
  double storage_drawn_j() const override { return std::numeric_limits<double>::quiet_NaN(); }

  const ComponentAccountingModel& model() const { return model_; }

 private:
  ComponentAccountingModel model_;
  std::uint32_t send_id_ = 0;
  std::uint32_t receive_id_ = 0;
};

}  // namespace

std::unique_ptr<NodeEnergy> attach_model(sim::NodeId node, ModelKind kind, const ModelParams& params,
                                         SimTime bucket_width, bool keep_entries) {
  params.power.validate();
  switch (kind) {
    case ModelKind::StateMachine: {
      if (params.harvester) throw EnergyError("state-machine model cannot model energy harvester units");
      return std::make_unique<StateMachineBinding>(node, params, EnergyTrace(bucket_width, 1.0, keep_entries));
    }
    case ModelKind::Hierarchical: {
      if (params.unit_mode == UnitMode::PowerEnergy) {
        const double capacity = params.capacity.value_or(params.initial_energy_j);
        auto model = HierarchicalModel::power_energy(capacity, params.initial_energy_j,
                                                     params.regulator_efficiency);
        return std::make_unique<HierarchicalBinding>(node, params, EnergyTrace(bucket_width, 1.0, keep_entries),
                                                     std::move(model));
      }
      if (!(params.nominal_voltage_v > 0)) throw EnergyError("charge-current mode needs a voltage > 0");
      const double initial_c = params.initial_energy_j / params.nominal_voltage_v;
      const double capacity = params.capacity.value_or(initial_c);
      auto model = HierarchicalModel::charge_current(capacity, initial_c, params.nominal_voltage_v,
                                                     params.regulator_efficiency);
      return std::make_unique<HierarchicalBinding>(
          node, params, EnergyTrace(bucket_width, params.nominal_voltage_v, keep_entries), std::move(model));
    }
    case ModelKind::ComponentAccounting: {
      if (params.harvester) {
        throw EnergyError("component-accounting model has no storage and cannot model energy harvester units");
      }
      return std::make_unique<ComponentBinding>(node, params, EnergyTrace(bucket_width, 1.0, keep_entries));
    }
  }
  throw EnergyError("unknown model kind");
}

}  // namespace wsn::energy
