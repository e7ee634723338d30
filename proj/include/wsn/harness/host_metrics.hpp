#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include <sys/types.h>

namespace wsn::harness {

/// Cumulative CPU time and current resident set size of a process, read from
/// /proc. Empty when the platform does not expose them or the process is gone.
struct ProcessStats {
  double cpu_seconds = 0.0;
  std::uint64_t rss_bytes = 0;
};

std::optional<ProcessStats> read_process_stats(pid_t pid);

struct HostSample {
  double elapsed_s = 0.0;
  double cpu_pct = 0.0;  // of one core over the preceding interval
  std::uint64_t rss_bytes = 0;
};

struct HostMetrics {
  bool available = false;
  std::vector<HostSample> samples;
  double cpu_avg_pct = 0.0;  // plain mean of the samples
  double cpu_max_pct = 0.0;
  std::uint64_t peak_rss_bytes = 0;
};

/// Background observer sampling a process at a fixed interval. A final
/// sample covering the partial interval is taken on stop().
class HostSampler {
 public:
  HostSampler(pid_t pid, std::chrono::milliseconds interval);
  ~HostSampler();
  HostSampler(const HostSampler&) = delete;
  HostSampler& operator=(const HostSampler&) = delete;

  HostMetrics stop();

 private:
  void loop();
  void take_sample();

  pid_t pid_;
  std::chrono::milliseconds interval_;
  std::chrono::steady_clock::time_point start_;
  std::chrono::steady_clock::time_point last_wall_;
  double last_cpu_ = 0.0;
  bool available_ = false;
  std::vector<HostSample> samples_;

  std::mutex mutex_;
  std::condition_variable cv_;
  bool stopping_ = false;
  bool stopped_ = false;
  std::thread thread_;
};

/// Samples `pid` every `interval` for `duration` and summarises the series.
HostMetrics sample_host_metrics(pid_t pid, std::chrono::milliseconds interval,
                                std::chrono::milliseconds duration);

}  // namespace wsn::harness
