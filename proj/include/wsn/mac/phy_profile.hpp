#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wsn::mac {

enum class Standard { Dot11b, Dot154 };

std::string_view to_string(Standard standard);

class MacError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// PHY/MAC timing constants for one protocol profile. Durations in µs.
struct PhyProfile {
  std::string name;
  Standard standard = Standard::Dot11b;
  double bitrate_bps = 11e6;
  double preamble_us = 192.0;      // preamble + PHY header (802.11b long PLCP, 802.15.4 SHR+PHR)
  std::uint32_t overhead_bytes = 55;  // added to the application payload to form the data frame

  // 802.11b
  std::uint32_t rts_bytes = 20;
  std::uint32_t cts_bytes = 14;
  std::uint32_t ack_bytes = 14;
  double sifs_us = 10.0;
  double difs_us = 50.0;
  double slot_us = 20.0;
  std::uint32_t cw_min = 31;
  std::uint32_t cw_max = 1023;
  std::uint32_t retry_limit = 7;

  // 802.15.4 (unslotted CSMA/CA)
  double backoff_unit_us = 320.0;  // aUnitBackoffPeriod = 20 symbols
  double cca_us = 128.0;           // 8 symbols
  double turnaround_us = 192.0;    // aTurnaroundTime = 12 symbols
  std::uint32_t ack154_bytes = 11;
  std::uint32_t min_be = 3;
  std::uint32_t max_be = 5;
  std::uint32_t max_csma_backoffs = 4;

  void validate() const;
};

PhyProfile dot11b_profile(std::string name, std::uint32_t overhead_bytes);
PhyProfile dot154_profile(std::string name, std::uint32_t overhead_bytes = 16);

/// Presets: "dot11b/ns2" (55 B overhead), "dot11b/omnet" (65 B), "dot154/default" (16 B).
PhyProfile profile_by_name(std::string_view name);
std::vector<std::string> profile_names();

/// preamble + 8 * bytes / (bitrate in Mbit/s), in µs, unrounded.
double compute_airtime_us(const PhyProfile& profile, std::uint32_t frame_bytes);

/// Display value: airtime floored to whole µs.
std::int64_t reported_airtime_us(double airtime_us);

}  // namespace wsn::mac
