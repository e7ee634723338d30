#pragma once

#include <array>
#include <optional>

#include "wsn/energy/power_table.hpp"
#include "wsn/sim/time.hpp"

namespace wsn::energy {

using sim::SimTime;

/// Radio-state energy model: each state has a power level, and the energy of
/// a stay is power times dwell time, charged when the state is left.
///
/// An optional constant auxiliary consumer (MCU, sensors) is charged
/// alongside every dwell regardless of radio state.
class StateMachineModel {
 public:
  StateMachineModel(RadioPowerTable table, double initial_energy_j, SimTime start = SimTime{0},
                    double aux_power_w = 0.0, RadioState initial_state = RadioState::Idle);

  /// Charges the dwell in the current state up to `now` and enters `next`.
  /// Returns the energy charged (radio + auxiliary). If the residual energy
  /// runs out during the dwell, the charge is clamped to the residual and the
  /// model becomes depleted; later calls charge nothing.
  double transition(RadioState next, SimTime now);

  RadioState state() const { return state_; }
  SimTime state_entry_time() const { return entry_; }
  const RadioPowerTable& power_table() const { return table_; }
  double aux_power() const { return aux_w_; }

  double consumed(RadioState state) const { return consumed_[index(state)]; }
  double aux_consumed() const { return aux_consumed_; }
  SimTime dwell(RadioState state) const { return dwell_[index(state)]; }
  double total_consumed() const;
  double initial_energy() const { return initial_; }
  double residual() const { return residual_; }
  bool depleted() const { return depletion_time_.has_value(); }
  std::optional<SimTime> depletion_time() const { return depletion_time_; }

 private:
  static std::size_t index(RadioState s) { return static_cast<std::size_t>(s); }

  RadioPowerTable table_;
  double initial_;
  double residual_;
  double aux_w_;
  RadioState state_;
  SimTime entry_;
  std::array<double, 4> consumed_{};
  std::array<SimTime, 4> dwell_{};
  double aux_consumed_ = 0.0;
  std::optional<SimTime> depletion_time_;
};

}  // namespace wsn::energy
