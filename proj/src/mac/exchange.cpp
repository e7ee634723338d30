#include "wsn/mac/exchange.hpp"

#include <algorithm>
#include <string>

namespace wsn::mac {

std::string_view to_string(FrameRole role) {
  switch (role) {
    case FrameRole::Rts: return "rts";
    case FrameRole::Cts: return "cts";
    case FrameRole::Data: return "data";
    case FrameRole::Ack: return "ack";
  }
  return "unknown";
}

std::string_view to_string(PhaseKind kind) {
  switch (kind) {
    case PhaseKind::Difs: return "difs";
    case PhaseKind::Backoff: return "backoff";
    case PhaseKind::Tx: return "tx";
    case PhaseKind::Rx: return "rx";
    case PhaseKind::Sifs: return "sifs";
    case PhaseKind::Turnaround: return "turnaround";
    case PhaseKind::Cca: return "cca";
  }
  return "unknown";
}

std::string_view to_string(Direction direction) {
  switch (direction) {
    case Direction::Sender: return "sender";
    case Direction::Receiver: return "receiver";
    case Direction::BothIdle: return "both-idle";
  }
  return "unknown";
}

SimTime phase_duration(double us) { return sim::from_micros(us); }

FrameSpec make_frame(const PhyProfile& profile, FrameRole role, std::uint32_t total_bytes) {
  return FrameSpec{role, total_bytes, compute_airtime_us(profile, total_bytes)};
}

namespace {

Phase idle_phase(PhaseKind kind, double us) {
  return Phase{kind, phase_duration(us), Direction::BothIdle, std::nullopt};
}

Phase tx_phase(const FrameSpec& frame, Direction transmitter) {
  return Phase{PhaseKind::Tx, phase_duration(frame.airtime_us), transmitter, frame};
}

ExchangeTimeline finish(std::vector<Phase> phases) {
  ExchangeTimeline t;
  t.phases = std::move(phases);
  t.total = t.sum_of_phases();
  return t;
}

void require_payload(std::uint32_t payload_bytes) {
  if (payload_bytes == 0) throw MacError("payload must be at least one byte");
}

Activity activity_of(const Phase& phase, Direction side) {
  switch (phase.kind) {
    case PhaseKind::Tx:
      return phase.direction == side ? Activity::Transmit : Activity::Receive;
    case PhaseKind::Rx:
    case PhaseKind::Cca:
      return phase.direction == side ? Activity::Receive : Activity::Idle;
    default:
      return Activity::Idle;
  }
}

}  // namespace

SimTime ExchangeTimeline::sum_of_phases() const {
  SimTime sum{0};
  for (const auto& p : phases) sum += p.duration;
  return sum;
}

std::vector<ActivitySpan> ExchangeTimeline::activity_for(Direction side) const {
  std::vector<ActivitySpan> spans;
  SimTime offset{0};
  for (const auto& p : phases) {
    const Activity a = activity_of(p, side);
    if (!spans.empty() && spans.back().activity == a) {
      spans.back().duration += p.duration;
    } else if (p.duration > SimTime{0}) {
      spans.push_back(ActivitySpan{offset, p.duration, a});
    }
    offset += p.duration;
  }
  return spans;
}

std::uint32_t ExchangeTimeline::frames_sent_by(Direction side) const {
  return static_cast<std::uint32_t>(std::count_if(phases.begin(), phases.end(), [&](const Phase& p) {
    return p.kind == PhaseKind::Tx && p.direction == side;
  }));
}

std::uint32_t ExchangeTimeline::frames_received_by(Direction side) const {
  return static_cast<std::uint32_t>(std::count_if(phases.begin(), phases.end(), [&](const Phase& p) {
    return p.kind == PhaseKind::Tx && p.direction != side;
  }));
}

ExchangeTimeline build_rts_cts_exchange(const PhyProfile& profile, std::uint32_t payload_bytes,
                                        SimTime backoff) {
  if (profile.standard != Standard::Dot11b) {
    throw MacError("RTS/CTS exchange requires an 802.11b profile, got '" + profile.name + "'");
  }
  require_payload(payload_bytes);
  if (backoff < SimTime{0}) throw MacError("backoff must be >= 0");

  std::vector<Phase> phases;
  phases.reserve(9);
  phases.push_back(idle_phase(PhaseKind::Difs, profile.difs_us));
  phases.push_back(Phase{PhaseKind::Backoff, backoff, Direction::BothIdle, std::nullopt});
  phases.push_back(tx_phase(make_frame(profile, FrameRole::Rts, profile.rts_bytes), Direction::Sender));
  phases.push_back(idle_phase(PhaseKind::Sifs, profile.sifs_us));
  phases.push_back(tx_phase(make_frame(profile, FrameRole::Cts, profile.cts_bytes), Direction::Receiver));
  phases.push_back(idle_phase(PhaseKind::Sifs, profile.sifs_us));
  phases.push_back(tx_phase(make_frame(profile, FrameRole::Data, profile.overhead_bytes + payload_bytes),
                            Direction::Sender));
  phases.push_back(idle_phase(PhaseKind::Sifs, profile.sifs_us));
  phases.push_back(tx_phase(make_frame(profile, FrameRole::Ack, profile.ack_bytes), Direction::Receiver));
  return finish(std::move(phases));
}

ExchangeTimeline build_cca_exchange(const PhyProfile& profile, std::uint32_t payload_bytes,
                                    std::uint32_t backoff_periods) {
  if (profile.standard != Standard::Dot154) {
    throw MacError("CCA exchange requires an 802.15.4 profile, got '" + profile.name + "'");
  }
  require_payload(payload_bytes);

  std::vector<Phase> phases;
  phases.reserve(6);
  phases.push_back(Phase{PhaseKind::Backoff, phase_duration(backoff_periods * profile.backoff_unit_us),
                         Direction::BothIdle, std::nullopt});
  phases.push_back(Phase{PhaseKind::Cca, phase_duration(profile.cca_us), Direction::Sender, std::nullopt});
  phases.push_back(Phase{PhaseKind::Turnaround, phase_duration(profile.turnaround_us), Direction::Sender,
                         std::nullopt});
  phases.push_back(tx_phase(make_frame(profile, FrameRole::Data, profile.overhead_bytes + payload_bytes),
                            Direction::Sender));
  phases.push_back(Phase{PhaseKind::Turnaround, phase_duration(profile.turnaround_us), Direction::Receiver,
                         std::nullopt});
  phases.push_back(tx_phase(make_frame(profile, FrameRole::Ack, profile.ack154_bytes), Direction::Receiver));
  return finish(std::move(phases));
}

std::uint64_t contention_window(const PhyProfile& profile, std::uint32_t attempt) {
  if (profile.standard == Standard::Dot11b) {
    std::uint64_t cw = profile.cw_min;
    for (std::uint32_t i = 0; i < attempt && cw < profile.cw_max; ++i) cw = cw * 2 + 1;
    return std::min<std::uint64_t>(cw, profile.cw_max);
  }
  const std::uint32_t be = std::min(profile.min_be + attempt, profile.max_be);
  return (std::uint64_t{1} << be) - 1;
}

std::uint64_t draw_backoff_slots(const PhyProfile& profile, sim::RngStream& rng, std::uint32_t attempt) {
  return rng.uniform_int(0, contention_window(profile, attempt));
}

namespace {
double slot_us(const PhyProfile& profile) {
  return profile.standard == Standard::Dot11b ? profile.slot_us : profile.backoff_unit_us;
}
}  // namespace

SimTime draw_backoff(const PhyProfile& profile, sim::RngStream& rng, std::uint32_t attempt) {
  return phase_duration(static_cast<double>(draw_backoff_slots(profile, rng, attempt)) * slot_us(profile));
}

std::uint32_t max_attempts(const PhyProfile& profile) {
  return profile.standard == Standard::Dot11b ? profile.retry_limit : profile.max_csma_backoffs + 1;
}

ExchangeTimeline build_exchange(const PhyProfile& profile, std::uint32_t payload_bytes,
                                sim::RngStream& rng, std::uint32_t attempt) {
  const std::uint64_t slots = draw_backoff_slots(profile, rng, attempt);
  if (profile.standard == Standard::Dot11b) {
    return build_rts_cts_exchange(profile, payload_bytes,
                                  phase_duration(static_cast<double>(slots) * profile.slot_us));
  }
  return build_cca_exchange(profile, payload_bytes, static_cast<std::uint32_t>(slots));
}

SimTime worst_case_exchange(const PhyProfile& profile, std::uint32_t payload_bytes, std::uint32_t attempt) {
  const std::uint64_t slots = contention_window(profile, attempt);
  if (profile.standard == Standard::Dot11b) {
    return build_rts_cts_exchange(profile, payload_bytes,
                                  phase_duration(static_cast<double>(slots) * profile.slot_us))
        .total;
  }
  return build_cca_exchange(profile, payload_bytes, static_cast<std::uint32_t>(slots)).total;
}

}  // namespace wsn::mac
