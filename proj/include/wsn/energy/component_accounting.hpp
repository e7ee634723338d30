#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "wsn/energy/power_table.hpp"

namespace wsn::energy {

/// Every (component, activity) pair the accounting model tracks.
enum class ComponentActivity : std::uint8_t {
  McuIdle,
  McuStandby,
  McuExtendedStandby,
  McuEnergySaving,
  McuOn,
  McuDown,
  McuAdc,
  Led0,
  Led1,
  Led2,
  RadioSend,
  RadioReceive,
  RadioSynchronize,
  MemoryRead,
  MemoryWrite,
};

inline constexpr std::size_t kComponentActivityCount = 15;

/// "mcu.idle", "led0.on", "radio.send", ...
std::string_view to_string(ComponentActivity activity);
std::optional<ComponentActivity> parse_component_activity(std::string_view component,
                                                          std::string_view activity);
std::optional<ComponentActivity> parse_component_activity(std::string_view dotted);

/// Joules charged per occurrence of each activity. Unset entries are unknown.
class ActivityCostTable {
 public:
  void set(ComponentActivity activity, double joules);
  std::optional<double> cost(ComponentActivity activity) const;

  /// Defaults used when a scenario does not provide a table.
  static ActivityCostTable defaults();

 private:
  std::array<std::optional<double>, kComponentActivityCount> costs_{};
};

/// Per-component energy accounting with no battery: each activity occurrence
/// adds its fixed cost to the matching accumulator.
class ComponentAccountingModel {
 public:
  explicit ComponentAccountingModel(ActivityCostTable costs);

  double charge(ComponentActivity activity, std::uint64_t count);
  /// String form; unknown names throw EnergyError.
  double charge(std::string_view component, std::string_view activity, std::uint64_t count);

  double accumulated(ComponentActivity activity) const;
  std::uint64_t occurrences(ComponentActivity activity) const;
  double total() const;
  const ActivityCostTable& costs() const { return costs_; }

 private:
  ActivityCostTable costs_;
  std::array<double, kComponentActivityCount> accumulators_{};
  std::array<std::uint64_t, kComponentActivityCount> counts_{};
};

}  // namespace wsn::energy
