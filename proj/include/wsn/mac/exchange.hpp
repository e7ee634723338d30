#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "wsn/mac/phy_profile.hpp"
#include "wsn/sim/rng.hpp"
#include "wsn/sim/time.hpp"

namespace wsn::mac {

using sim::SimTime;

enum class FrameRole { Rts, Cts, Data, Ack };
enum class PhaseKind { Difs, Backoff, Tx, Rx, Sifs, Turnaround, Cca };
/// Which side of the exchange acts during a phase. For Tx it is the
/// transmitter (the other side receives); for Cca/Turnaround, the side doing
/// it; BothIdle for inter-frame gaps and backoff.
enum class Direction { Sender, Receiver, BothIdle };

std::string_view to_string(FrameRole role);
std::string_view to_string(PhaseKind kind);
std::string_view to_string(Direction direction);

struct FrameSpec {
  FrameRole role = FrameRole::Data;
  std::uint32_t total_bytes = 0;
  double airtime_us = 0.0;
};

FrameSpec make_frame(const PhyProfile& profile, FrameRole role, std::uint32_t total_bytes);

struct Phase {
  PhaseKind kind = PhaseKind::Difs;
  SimTime duration{0};
  Direction direction = Direction::BothIdle;
  std::optional<FrameSpec> frame;  // set for Tx phases
};

/// Radio activity of one side of the exchange, relative to the exchange start.
enum class Activity { Idle, Transmit, Receive };

struct ActivitySpan {
  SimTime offset{0};
  SimTime duration{0};
  Activity activity = Activity::Idle;
};

struct ExchangeTimeline {
  std::vector<Phase> phases;
  SimTime total{0};

  /// Consecutive phases with the same activity for `side` are merged.
  std::vector<ActivitySpan> activity_for(Direction side) const;
  SimTime sum_of_phases() const;
  std::uint32_t frames_sent_by(Direction side) const;
  std::uint32_t frames_received_by(Direction side) const;
};

/// Phase duration: airtime in µs rounded half-up to integer ns.
SimTime phase_duration(double us);

/// DIFS, backoff, RTS, SIFS, CTS, SIFS, DATA, SIFS, ACK (802.11b only).
ExchangeTimeline build_rts_cts_exchange(const PhyProfile& profile, std::uint32_t payload_bytes,
                                        SimTime backoff);

/// backoff periods, CCA, turnaround, DATA, turnaround, ACK (802.15.4 only).
ExchangeTimeline build_cca_exchange(const PhyProfile& profile, std::uint32_t payload_bytes,
                                    std::uint32_t backoff_periods);

/// Contention window upper bound (inclusive, in slots) for a retry attempt.
std::uint64_t contention_window(const PhyProfile& profile, std::uint32_t attempt);

/// Uniform slot count in [0, CW(attempt)].
std::uint64_t draw_backoff_slots(const PhyProfile& profile, sim::RngStream& rng, std::uint32_t attempt);

/// draw_backoff_slots times the slot (802.11b) or unit backoff period (802.15.4).
SimTime draw_backoff(const PhyProfile& profile, sim::RngStream& rng, std::uint32_t attempt);

/// Attempts before a frame is dropped: retry limit (802.11b) or
/// macMaxCSMABackoffs (802.15.4).
std::uint32_t max_attempts(const PhyProfile& profile);

/// Exchange for the profile's standard with a freshly drawn backoff.
ExchangeTimeline build_exchange(const PhyProfile& profile, std::uint32_t payload_bytes,
                                sim::RngStream& rng, std::uint32_t attempt);

/// Longest exchange possible at the given attempt (maximum backoff draw).
SimTime worst_case_exchange(const PhyProfile& profile, std::uint32_t payload_bytes,
                            std::uint32_t attempt = 0);

}  // namespace wsn::mac
