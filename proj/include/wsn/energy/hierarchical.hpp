#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wsn/energy/power_table.hpp"

namespace wsn::energy {

enum class UnitMode { PowerEnergy, ChargeCurrent };

std::string_view to_string(UnitMode mode);
UnitMode unit_mode_from_string(std::string_view name);

/// A named source or sink. Watts in power-energy mode, amperes in
/// charge-current mode.
struct Flow {
  std::string id;
  double amount = 0.0;
};

/// Storage wired to consumers and generators that run in parallel.
///
/// The unit system is chosen at construction and cannot change: power-energy
/// mode integrates watts into joules, charge-current mode integrates amperes
/// into coulombs. The two modes are separate integrators; they agree through
/// E = Q * V only when the voltage is constant.
class HierarchicalModel {
 public:
  static HierarchicalModel power_energy(double capacity_j, double residual_j, double efficiency = 1.0);
  static HierarchicalModel charge_current(double capacity_c, double residual_c, double nominal_voltage_v,
                                          double efficiency = 1.0);

  UnitMode unit_mode() const;

  void set_consumer(std::string_view id, double amount);
  void set_generator(std::string_view id, double amount);
  double consumer_total() const;
  double generator_total() const;
  const std::vector<Flow>& consumers() const { return consumers_; }
  const std::vector<Flow>& generators() const { return generators_; }

  /// Advances by dt seconds: residual <- clamp(residual + (G - C/eff) dt, 0, capacity).
  /// Returns the new residual (J or C). Once the storage is exhausted the
  /// node is dead: consumers stop drawing, generators may still refill.
  double step(double dt_s);

  double residual() const;
  double capacity() const;
  double initial() const { return initial_; }
  /// Drawn from storage by consumers (J or C, after regulator efficiency).
  double consumed() const;
  /// Generation accepted into storage (J or C).
  double harvested() const;
  double wasted() const;
  double efficiency() const { return efficiency_; }
  std::optional<double> nominal_voltage() const;

  double elapsed() const { return elapsed_; }
  bool depleted() const { return depletion_time_.has_value(); }
  std::optional<double> depletion_time() const { return depletion_time_; }
  /// Times (elapsed seconds) at which the storage reached capacity.
  const std::vector<double>& full_events() const { return full_events_; }

  /// Residual expressed in joules (Q * V in charge-current mode).
  double residual_energy_j() const;

 private:
  struct StepOutcome {
    std::optional<double> depleted_after;  // seconds into the step
    std::optional<double> full_after;
  };

  // Power-energy path: joules and watts.
  struct EnergyStore {
    double capacity_j = 0.0;
    double residual_j = 0.0;
    double consumed_j = 0.0;
    double harvested_j = 0.0;
    double wasted_j = 0.0;
    StepOutcome step(double load_w, double supply_w, double dt_s, bool dead);
  };

  // Charge-current path: coulombs and amperes.
  struct ChargeStore {
    double capacity_c = 0.0;
    double residual_c = 0.0;
    double voltage_v = 0.0;
    double consumed_c = 0.0;
    double harvested_c = 0.0;
    double wasted_c = 0.0;
    StepOutcome step(double load_a, double supply_a, double dt_s, bool dead);
  };

  HierarchicalModel(std::variant<EnergyStore, ChargeStore> store, double efficiency, double initial);

  std::variant<EnergyStore, ChargeStore> store_;
  double efficiency_;
  double initial_;
  std::vector<Flow> consumers_;
  std::vector<Flow> generators_;
  double elapsed_ = 0.0;
  std::optional<double> depletion_time_;
  std::vector<double> full_events_;
};

}  // namespace wsn::energy
