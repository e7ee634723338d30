#include "wsn/sim/engine.hpp"

#include <cassert>
#include <string>

namespace wsn::sim {

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::FrameTxStart: return "frame-tx-start";
    case EventKind::FrameRxEnd: return "frame-rx-end";
    case EventKind::Timer: return "timer";
    case EventKind::AppSend: return "app-send";
    case EventKind::EnergySample: return "energy-sample";
    case EventKind::RunEnd: return "run-end";
  }
  return "unknown";
}

EventHandle Engine::schedule(SimTime time, EventKind kind, NodeId node, EventPayload payload) {
  if (time < now_) {
    throw SchedulingError("cannot schedule event at " + std::to_string(time.count()) +
                          " ns: clock is already at " + std::to_string(now_.count()) + " ns");
  }
  const std::uint64_t seq = next_seq_++;
  queue_.push(Event{time, seq, kind, node, std::move(payload)});
  return seq;
}

std::uint64_t Engine::run_until(SimTime end) {
  if (end < now_) {
    throw SchedulingError("run_until target " + std::to_string(end.count()) +
                          " ns is before the current clock");
  }
  std::uint64_t count = 0;
#ifndef NDEBUG
  SimTime last_time = now_;
  std::uint64_t last_seq = 0;
#endif
  while (!queue_.empty() && queue_.top().time <= end) {
    Event ev = queue_.top();
    queue_.pop();
#ifndef NDEBUG
    assert(ev.time > last_time || (ev.time == last_time && ev.seq > last_seq));
    last_time = ev.time;
    last_seq = ev.seq;
#endif
    now_ = ev.time;
    if (observer_) observer_(ev);
    if (handler_) handler_(*this, ev);
    ++count;
  }
  now_ = end;
  processed_ += count;
  return count;
}

}  // namespace wsn::sim
