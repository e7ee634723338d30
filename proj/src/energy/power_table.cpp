#include "wsn/energy/power_table.hpp"

namespace wsn::energy {

std::string_view to_string(RadioState state) {
  switch (state) {
    case RadioState::Tx: return "tx";
    case RadioState::Rx: return "rx";
    case RadioState::Idle: return "idle";
    case RadioState::Sleep: return "sleep";
  }
  return "unknown";
}

double RadioPowerTable::power(RadioState state) const {
  switch (state) {
    case RadioState::Tx: return tx_w;
    case RadioState::Rx: return rx_w;
    case RadioState::Idle: return idle_w;
    case RadioState::Sleep: return sleep_w;
  }
  return 0.0;
}

void RadioPowerTable::validate() const {
  if (!(tx_w > 0) || !(rx_w > 0) || !(sleep_w > 0) || !(idle_w > 0)) {
    throw EnergyError("radio power table entries must all be > 0");
  }
}

RadioPowerTable hdg204_power_table() { return {0.750, 0.220, 0.0002, 0.0002}; }
RadioPowerTable cc2420_power_table() { return {0.052, 0.059, 0.00006, 0.00006}; }

}  // namespace wsn::energy
