#include "wsn/energy/component_accounting.hpp"

#include <string>

namespace wsn::energy {

namespace {

constexpr std::array<std::string_view, kComponentActivityCount> kNames{
    "mcu.idle",  "mcu.standby", "mcu.extended-standby", "mcu.energy-saving", "mcu.on",
    "mcu.down",  "mcu.adc",     "led0.on",              "led1.on",           "led2.on",
    "radio.send", "radio.receive", "radio.synchronize", "memory.read",       "memory.write",
};

std::size_t index(ComponentActivity a) { return static_cast<std::size_t>(a); }

}  // namespace

std::string_view to_string(ComponentActivity activity) { return kNames[index(activity)]; }

std::optional<ComponentActivity> parse_component_activity(std::string_view dotted) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == dotted) return static_cast<ComponentActivity>(i);
  }
  return std::nullopt;
}

std::optional<ComponentActivity> parse_component_activity(std::string_view component,
                                                          std::string_view activity) {
  std::string dotted(component);
  dotted += '.';
  dotted += activity;
  return parse_component_activity(std::string_view(dotted));
}

void ActivityCostTable::set(ComponentActivity activity, double joules) {
  if (!(joules >= 0)) throw EnergyError("activity cost must be >= 0");
  costs_[index(activity)] = joules;
}

std::optional<double> ActivityCostTable::cost(ComponentActivity activity) const {
  return costs_[index(activity)];
}

ActivityCostTable ActivityCostTable::defaults() {
  ActivityCostTable t;
  t.set(ComponentActivity::McuIdle, 1.0e-6);
  t.set(ComponentActivity::McuStandby, 0.5e-6);
  t.set(ComponentActivity::McuExtendedStandby, 0.4e-6);
  t.set(ComponentActivity::McuEnergySaving, 0.2e-6);
  t.set(ComponentActivity::McuOn, 8.0e-6);
  t.set(ComponentActivity::McuDown, 0.1e-6);
  t.set(ComponentActivity::McuAdc, 2.0e-6);
  t.set(ComponentActivity::Led0, 10.0e-6);
  t.set(ComponentActivity::Led1, 10.0e-6);
  t.set(ComponentActivity::Led2, 10.0e-6);
  t.set(ComponentActivity::RadioSend, 100.0e-6);
  t.set(ComponentActivity::RadioReceive, 50.0e-6);
  t.set(ComponentActivity::RadioSynchronize, 5.0e-6);
  t.set(ComponentActivity::MemoryRead, 0.5e-6);
  t.set(ComponentActivity::MemoryWrite, 1.0e-6);
  return t;
}

ComponentAccountingModel::ComponentAccountingModel(ActivityCostTable costs) : costs_(costs) {}

double ComponentAccountingModel::charge(ComponentActivity activity, std::uint64_t count) {
  const auto cost = costs_.cost(activity);
  if (!cost) {
    throw EnergyError("no cost configured for activity '" + std::string(to_string(activity)) + "'");
  }
  const double joules = *cost * static_cast<double>(count);
  accumulators_[index(activity)] += joules;
  counts_[index(activity)] += count;
  return joules;
}

double ComponentAccountingModel::charge(std::string_view component, std::string_view activity,
                                        std::uint64_t count) {
  const auto parsed = parse_component_activity(component, activity);
  if (!parsed) {
    throw EnergyError("unknown activity '" + std::string(component) + "." + std::string(activity) + "'");
  }
  return charge(*parsed, count);
}

double ComponentAccountingModel::accumulated(ComponentActivity activity) const {
  return accumulators_[index(activity)];
}

std::uint64_t ComponentAccountingModel::occurrences(ComponentActivity activity) const {
  return counts_[index(activity)];
}

double ComponentAccountingModel::total() const {
  double sum = 0.0;
  for (double a : accumulators_) sum += a;
  return sum;
}

}  // namespace wsn::energy
