#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

#include "wsn/sim/time.hpp"

namespace wsn::sim {

using NodeId = std::uint32_t;

enum class EventKind : std::uint8_t { FrameTxStart, FrameRxEnd, Timer, AppSend, EnergySample, RunEnd };

std::string_view to_string(EventKind kind);

/// Application message handed to the MAC (echo request or reply).
struct MessagePayload {
  NodeId destination = 0;
  std::uint32_t payload_bytes = 0;
  bool is_reply = false;
  std::uint32_t flow = 0;
};

struct TimerPayload {
  std::uint64_t id = 0;
};

using EventPayload = std::variant<std::monostate, MessagePayload, TimerPayload>;

struct Event {
  SimTime time{};
  std::uint64_t seq = 0;
  EventKind kind = EventKind::Timer;
  NodeId node = 0;
  EventPayload payload{};
};

using EventHandle = std::uint64_t;

class SchedulingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Single-threaded discrete-event engine.
///
/// Events are dequeued in ascending (time, seq) order; seq is the insertion
/// counter, so simultaneous events run in the order they were scheduled.
class Engine {
 public:
  using Handler = std::function<void(Engine&, const Event&)>;
  using Observer = std::function<void(const Event&)>;

  Engine() = default;
  explicit Engine(Handler handler) : handler_(std::move(handler)) {}

  void set_handler(Handler handler) { handler_ = std::move(handler); }
  /// Called for every processed event before the handler. Used for traces.
  void set_observer(Observer observer) { observer_ = std::move(observer); }

  EventHandle schedule(SimTime time, EventKind kind, NodeId node, EventPayload payload = {});

  /// Processes every event with time <= end, then sets the clock to end.
  std::uint64_t run_until(SimTime end);

  SimTime now() const { return now_; }
  std::size_t pending() const { return queue_.size(); }
  std::uint64_t processed() const { return processed_; }

 private:
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.time != b.time) return a.time > b.time;
      return a.seq > b.seq;
    }
  };

  std::priority_queue<Event, std::vector<Event>, Later> queue_;
  SimTime now_{0};
  std::uint64_t next_seq_ = 1;
  std::uint64_t processed_ = 0;
  Handler handler_;
  Observer observer_;
};

}  // namespace wsn::sim
