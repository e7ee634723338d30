#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>

namespace wsn::sim {

// Virtual clock value: integer nanoseconds since simulation start.
using SimTime = std::chrono::duration<std::int64_t, std::nano>;

inline constexpr SimTime kZero{0};

// Round-half-away-from-zero conversion from a real-valued microsecond count.
inline SimTime from_micros(double us) { return SimTime{std::llround(us * 1e3)}; }
inline SimTime from_seconds(double s) { return SimTime{std::llround(s * 1e9)}; }

inline double to_micros(SimTime t) { return static_cast<double>(t.count()) * 1e-3; }
inline double to_seconds(SimTime t) { return static_cast<double>(t.count()) * 1e-9; }

}  // namespace wsn::sim
