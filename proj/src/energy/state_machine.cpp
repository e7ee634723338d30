#include "wsn/energy/state_machine.hpp"

#include <cmath>
#include <string>

namespace wsn::energy {

StateMachineModel::StateMachineModel(RadioPowerTable table, double initial_energy_j, SimTime start,
                                     double aux_power_w, RadioState initial_state)
    : table_(table),
      initial_(initial_energy_j),
      residual_(initial_energy_j),
      aux_w_(aux_power_w),
      state_(initial_state),
      entry_(start) {
  table_.validate();
  if (!(initial_energy_j >= 0)) throw EnergyError("initial energy must be >= 0");
  if (!(aux_power_w >= 0)) throw EnergyError("auxiliary power must be >= 0");
}

double StateMachineModel::transition(RadioState next, SimTime now) {
  if (now < entry_) {
    throw EnergyError("state transition at " + std::to_string(now.count()) +
                      " ns precedes state entry at " + std::to_string(entry_.count()) + " ns");
  }
  if (depleted()) {
    entry_ = now;
    state_ = next;
    return 0.0;
  }

  const SimTime dwell = now - entry_;
  const double radio_w = table_.power(state_);
  const double seconds = sim::to_seconds(dwell);
  double radio_j = radio_w * seconds;
  double aux_j = aux_w_ * seconds;

  if (radio_j + aux_j > residual_) {
    // Exhausted part-way through the dwell: charge only up to depletion.
    const double total_w = radio_w + aux_w_;
    const SimTime until = sim::from_seconds(residual_ / total_w);
    const SimTime used = until < dwell ? until : dwell;
    radio_j = residual_ * (radio_w / total_w);
    aux_j = residual_ - radio_j;
    dwell_[index(state_)] += used;
    consumed_[index(state_)] += radio_j;
    aux_consumed_ += aux_j;
    residual_ = 0.0;
    depletion_time_ = entry_ + used;
  } else {
    dwell_[index(state_)] += dwell;
    consumed_[index(state_)] += radio_j;
    aux_consumed_ += aux_j;
    residual_ -= radio_j + aux_j;
  }

  state_ = next;
  entry_ = now;
  return radio_j + aux_j;
}

double StateMachineModel::total_consumed() const {
  double sum = aux_consumed_;
  for (double c : consumed_) sum += c;
  return sum;
}

}  // namespace wsn::energy
