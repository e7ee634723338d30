#include "wsn/harness/host_metrics.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

namespace wsn::harness {

std::optional<ProcessStats> read_process_stats(pid_t pid) {
  std::ifstream in("/proc/" + std::to_string(pid) + "/stat");
  if (!in) return std::nullopt;
  std::string line;
  std::getline(in, line);
  // The command name may contain spaces; fields resume after the last ')'.
  const auto close = line.rfind(')');
  if (close == std::string::npos) return std::nullopt;
  std::istringstream fields(line.substr(close + 2));
  std::vector<std::string> f;
  for (std::string tok; fields >> tok;) f.push_back(tok);
  // f[0] is field 3 (state); utime=14, stime=15, rss=24.
  if (f.size() < 22) return std::nullopt;
  const long ticks = sysconf(_SC_CLK_TCK);
  const long page = sysconf(_SC_PAGESIZE);
  if (ticks <= 0 || page <= 0) return std::nullopt;
  ProcessStats s;
  s.cpu_seconds = static_cast<double>(std::stoull(f[11]) + std::stoull(f[12])) / static_cast<double>(ticks);
  s.rss_bytes = std::stoull(f[21]) * static_cast<std::uint64_t>(page);
  return s;
}

HostSampler::HostSampler(pid_t pid, std::chrono::milliseconds interval)
    : pid_(pid), interval_(interval), start_(std::chrono::steady_clock::now()), last_wall_(start_) {
  if (auto s = read_process_stats(pid_)) {
    available_ = true;
    last_cpu_ = s->cpu_seconds;
    thread_ = std::thread([this] { loop(); });
  }
}

HostSampler::~HostSampler() { stop(); }

void HostSampler::take_sample() {
  const auto s = read_process_stats(pid_);
  const auto now = std::chrono::steady_clock::now();
  if (!s) return;
  const double wall = std::chrono::duration<double>(now - last_wall_).count();
  if (wall <= 0) return;
  HostSample sample;
  sample.elapsed_s = std::chrono::duration<double>(now - start_).count();
  sample.cpu_pct = 100.0 * (s->cpu_seconds - last_cpu_) / wall;
  sample.rss_bytes = s->rss_bytes;
  samples_.push_back(sample);
  last_cpu_ = s->cpu_seconds;
  last_wall_ = now;
}

void HostSampler::loop() {
  std::unique_lock lock(mutex_);
  while (!stopping_) {
    if (cv_.wait_for(lock, interval_, [this] { return stopping_; })) break;
    take_sample();
  }
}

HostMetrics HostSampler::stop() {
  {
    std::lock_guard lock(mutex_);
    if (!stopped_) {
      stopping_ = true;
    }
  }
  cv_.notify_all();
  if (thread_.joinable()) thread_.join();

  std::lock_guard lock(mutex_);
  if (!stopped_ && available_) take_sample();
  stopped_ = true;

  HostMetrics m;
  m.available = available_ && !samples_.empty();
  m.samples = samples_;
  if (m.available) {
    double sum = 0.0;
    for (const auto& s : samples_) {
      sum += s.cpu_pct;
      m.cpu_max_pct = std::max(m.cpu_max_pct, s.cpu_pct);
      m.peak_rss_bytes = std::max(m.peak_rss_bytes, s.rss_bytes);
    }
    m.cpu_avg_pct = sum / static_cast<double>(samples_.size());
  }
  return m;
}

HostMetrics sample_host_metrics(pid_t pid, std::chrono::milliseconds interval, std::chrono::milliseconds duration) {
  HostSampler sampler(pid, interval);
  std::this_thread::sleep_for(duration);
  return sampler.stop();
}

}  // namespace wsn::harness
