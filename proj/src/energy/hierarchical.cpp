#include "wsn/energy/hierarchical.hpp"

#include <algorithm>

namespace wsn::energy {

std::string_view to_string(UnitMode mode) {
  return mode == UnitMode::PowerEnergy ? "power-energy" : "charge-current";
}

UnitMode unit_mode_from_string(std::string_view name) {
  if (name == "power-energy") return UnitMode::PowerEnergy;
  if (name == "charge-current") return UnitMode::ChargeCurrent;
  throw EnergyError("unknown unit mode '" + std::string(name) + "'");
}

namespace {

void set_flow(std::vector<Flow>& flows, std::string_view id, double amount) {
  if (!(amount >= 0)) throw EnergyError("flow '" + std::string(id) + "' must be >= 0");
  auto it = std::find_if(flows.begin(), flows.end(), [&](const Flow& f) { return f.id == id; });
  if (it == flows.end()) {
    flows.push_back(Flow{std::string(id), amount});
  } else {
    it->amount = amount;
  }
}

double sum(const std::vector<Flow>& flows) {
  double s = 0.0;
  for (const auto& f : flows) s += f.amount;
  return s;
}

void check_store(double capacity, double residual, double efficiency) {
  if (!(capacity > 0)) throw EnergyError("storage capacity must be > 0");
  if (!(residual >= 0 && residual <= capacity)) throw EnergyError("residual must lie in [0, capacity]");
  if (!(efficiency > 0 && efficiency <= 1)) throw EnergyError("regulator efficiency must be in (0, 1]");
}

}  // namespace

HierarchicalModel::HierarchicalModel(std::variant<EnergyStore, ChargeStore> store, double efficiency,
                                     double initial)
    : store_(store), efficiency_(efficiency), initial_(initial) {}

HierarchicalModel HierarchicalModel::power_energy(double capacity_j, double residual_j, double efficiency) {
  check_store(capacity_j, residual_j, efficiency);
  EnergyStore s;
  s.capacity_j = capacity_j;
  s.residual_j = residual_j;
  return HierarchicalModel(s, efficiency, residual_j);
}

HierarchicalModel HierarchicalModel::charge_current(double capacity_c, double residual_c,
                                                    double nominal_voltage_v, double efficiency) {
  check_store(capacity_c, residual_c, efficiency);
  if (!(nominal_voltage_v > 0)) throw EnergyError("nominal voltage must be > 0");
  ChargeStore s;
  s.capacity_c = capacity_c;
  s.residual_c = residual_c;
  s.voltage_v = nominal_voltage_v;
  return HierarchicalModel(s, efficiency, residual_c);
}

UnitMode HierarchicalModel::unit_mode() const {
  return std::holds_alternative<EnergyStore>(store_) ? UnitMode::PowerEnergy : UnitMode::ChargeCurrent;
}

void HierarchicalModel::set_consumer(std::string_view id, double amount) { set_flow(consumers_, id, amount); }
void HierarchicalModel::set_generator(std::string_view id, double amount) { set_flow(generators_, id, amount); }
double HierarchicalModel::consumer_total() const { return sum(consumers_); }
double HierarchicalModel::generator_total() const { return sum(generators_); }

HierarchicalModel::StepOutcome HierarchicalModel::EnergyStore::step(double load_w, double supply_w,
                                                                     double dt_s, bool dead) {
  StepOutcome out;
  if (dead) load_w = 0.0;
  const double net_w = supply_w - load_w;
  const double next_j = residual_j + net_w * dt_s;
  if (next_j < 0.0) {
    const double t = residual_j / -net_w;
    consumed_j += load_w * t;
    harvested_j += supply_w * t;
    residual_j = 0.0;
    out.depleted_after = t;
    // Node is dead for the rest of the step; only generation continues.
    const double refill_j = supply_w * (dt_s - t);
    const double accepted_j = std::min(refill_j, capacity_j);
    harvested_j += accepted_j;
    wasted_j += refill_j - accepted_j;
    residual_j = accepted_j;
  } else if (next_j > capacity_j) {
    out.full_after = (capacity_j - residual_j) / net_w;
    consumed_j += load_w * dt_s;
    harvested_j += supply_w * dt_s - (next_j - capacity_j);
    wasted_j += next_j - capacity_j;
    residual_j = capacity_j;
  } else {
    consumed_j += load_w * dt_s;
    harvested_j += supply_w * dt_s;
    residual_j = next_j;
  }
  return out;
}

HierarchicalModel::StepOutcome HierarchicalModel::ChargeStore::step(double load_a, double supply_a,
                                                                     double dt_s, bool dead) {
  StepOutcome out;
  if (dead) load_a = 0.0;
  const double net_a = supply_a - load_a;
  const double next_c = residual_c + net_a * dt_s;
  if (next_c < 0.0) {
    const double t = residual_c / -net_a;
    consumed_c += load_a * t;
    harvested_c += supply_a * t;
    residual_c = 0.0;
    out.depleted_after = t;
    const double refill_c = supply_a * (dt_s - t);
    const double accepted_c = std::min(refill_c, capacity_c);
    harvested_c += accepted_c;
    wasted_c += refill_c - accepted_c;
    residual_c = accepted_c;
  } else if (next_c > capacity_c) {
    out.full_after = (capacity_c - residual_c) / net_a;
    consumed_c += load_a * dt_s;
    harvested_c += supply_a * dt_s - (next_c - capacity_c);
    wasted_c += next_c - capacity_c;
    residual_c = capacity_c;
  } else {
    consumed_c += load_a * dt_s;
    harvested_c += supply_a * dt_s;
    residual_c = next_c;
  }
  return out;
}

double HierarchicalModel::step(double dt_s) {
  if (!(dt_s >= 0)) throw EnergyError("step duration must be >= 0");
  const double load = consumer_total() / efficiency_;
  const double supply = generator_total();
  const bool dead = depleted();
  const StepOutcome out =
      std::visit([&](auto& s) { return s.step(load, supply, dt_s, dead); }, store_);
  if (out.depleted_after && !depletion_time_) depletion_time_ = elapsed_ + *out.depleted_after;
  if (out.full_after) full_events_.push_back(elapsed_ + *out.full_after);
  elapsed_ += dt_s;
  return residual();
}

double HierarchicalModel::residual() const {
  if (const auto* e = std::get_if<EnergyStore>(&store_)) return e->residual_j;
  return std::get<ChargeStore>(store_).residual_c;
}

double HierarchicalModel::capacity() const {
  if (const auto* e = std::get_if<EnergyStore>(&store_)) return e->capacity_j;
  return std::get<ChargeStore>(store_).capacity_c;
}

double HierarchicalModel::consumed() const {
  if (const auto* e = std::get_if<EnergyStore>(&store_)) return e->consumed_j;
  return std::get<ChargeStore>(store_).consumed_c;
}

double HierarchicalModel::harvested() const {
  if (const auto* e = std::get_if<EnergyStore>(&store_)) return e->harvested_j;
  return std::get<ChargeStore>(store_).harvested_c;
}

double HierarchicalModel::wasted() const {
  if (const auto* e = std::get_if<EnergyStore>(&store_)) return e->wasted_j;
  return std::get<ChargeStore>(store_).wasted_c;
}

std::optional<double> HierarchicalModel::nominal_voltage() const {
  if (const auto* c = std::get_if<ChargeStore>(&store_)) return c->voltage_v;
  return std::nullopt;
}

double HierarchicalModel::residual_energy_j() const {
  if (const auto* c = std::get_if<ChargeStore>(&store_)) return c->residual_c * c->voltage_v;
  return std::get<EnergyStore>(store_).residual_j;
}

}  // namespace wsn::energy
