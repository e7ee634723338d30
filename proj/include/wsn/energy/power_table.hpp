#pragma once

#include <array>
#include <stdexcept>
#include <string_view>

namespace wsn::energy {

enum class RadioState { Tx, Rx, Idle, Sleep };

inline constexpr std::array<RadioState, 4> kRadioStates{RadioState::Tx, RadioState::Rx, RadioState::Idle,
                                                        RadioState::Sleep};

std::string_view to_string(RadioState state);

class EnergyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Radio power draw per state, in watts. No ordering between states is
/// assumed (the CC2420 receives at a higher power than it transmits).
struct RadioPowerTable {
  double tx_w = 0.0;
  double rx_w = 0.0;
  double sleep_w = 0.0;
  double idle_w = 0.0;

  double power(RadioState state) const;
  void validate() const;
};

/// HDG204 802.11b module: 750 / 220 / 0.2 / 0.2 mW.
RadioPowerTable hdg204_power_table();
/// CC2420 802.15.4 module: 52 / 59 / 0.06 / 0.06 mW.
RadioPowerTable cc2420_power_table();

}  // namespace wsn::energy
