#include "wsn/mac/phy_profile.hpp"

#include <cmath>

namespace wsn::mac {

std::string_view to_string(Standard standard) {
  return standard == Standard::Dot11b ? "dot11b" : "dot154";
}

void PhyProfile::validate() const {
  if (!(bitrate_bps > 0)) throw MacError("profile '" + name + "': bitrate must be > 0");
  if (overhead_bytes == 0) throw MacError("profile '" + name + "': overhead_bytes must be > 0");
  for (double d : {preamble_us, sifs_us, difs_us, slot_us, backoff_unit_us, cca_us, turnaround_us}) {
    if (!(d >= 0)) throw MacError("profile '" + name + "': durations must be >= 0");
  }
}

PhyProfile dot11b_profile(std::string name, std::uint32_t overhead_bytes) {
  PhyProfile p;
  p.name = std::move(name);
  p.standard = Standard::Dot11b;
  p.bitrate_bps = 11e6;
  p.preamble_us = 192.0;
  p.overhead_bytes = overhead_bytes;
  return p;
}

PhyProfile dot154_profile(std::string name, std::uint32_t overhead_bytes) {
  PhyProfile p;
  p.name = std::move(name);
  p.standard = Standard::Dot154;
  p.bitrate_bps = 250e3;
  p.preamble_us = 192.0;
  p.overhead_bytes = overhead_bytes;
  return p;
}

PhyProfile profile_by_name(std::string_view name) {
  if (name == "dot11b/ns2") return dot11b_profile("dot11b/ns2", 55);
  if (name == "dot11b/omnet") return dot11b_profile("dot11b/omnet", 65);
  if (name == "dot154/default") return dot154_profile("dot154/default", 16);
  throw MacError("unknown profile '" + std::string(name) +
                 "' (expected dot11b/ns2, dot11b/omnet or dot154/default)");
}

std::vector<std::string> profile_names() { return {"dot11b/ns2", "dot11b/omnet", "dot154/default"}; }

double compute_airtime_us(const PhyProfile& profile, std::uint32_t frame_bytes) {
  if (frame_bytes == 0) throw MacError("frame must contain at least one byte");
  return profile.preamble_us + 8.0 * frame_bytes / (profile.bitrate_bps * 1e-6);
}

std::int64_t reported_airtime_us(double airtime_us) {
  return static_cast<std::int64_t>(std::floor(airtime_us));
}

}  // namespace wsn::mac
