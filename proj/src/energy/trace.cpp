#include "wsn/energy/trace.hpp"

#include <algorithm>
#include <string>

namespace wsn::energy {

std::string_view to_string(Role role) {
  switch (role) {
    case Role::None: return "none";
    case Role::Initiator: return "initiator";
    case Role::Responder: return "responder";
  }
  return "unknown";
}

EnergyTrace::EnergyTrace(SimTime bucket_width, double unit_to_joules, bool keep_entries)
    : width_(bucket_width), unit_to_joules_(unit_to_joules), keep_entries_(keep_entries) {
  if (bucket_width <= SimTime{0}) throw EnergyError("trace bucket width must be > 0");
  if (!(unit_to_joules > 0)) throw EnergyError("unit conversion factor must be > 0");
}

std::uint32_t EnergyTrace::category(std::string_view name) {
  auto it = std::find(categories_.begin(), categories_.end(), name);
  if (it != categories_.end()) return static_cast<std::uint32_t>(it - categories_.begin());
  categories_.emplace_back(name);
  rates_.push_back(0.0);
  rate_set_.push_back(false);
  for (auto& row : buckets_) row.resize(categories_.size());
  return static_cast<std::uint32_t>(categories_.size() - 1);
}

EnergyTrace::Cell& EnergyTrace::cell(std::size_t bucket, std::uint32_t category) {
  if (bucket >= buckets_.size()) {
    buckets_.resize(bucket + 1, std::vector<Cell>(categories_.size()));
  }
  return buckets_[bucket][category];
}

const EnergyTrace::Cell* EnergyTrace::find_cell(std::size_t bucket, std::uint32_t category) const {
  if (bucket >= buckets_.size() || category >= categories_.size()) return nullptr;
  return &buckets_[bucket][category];
}

void EnergyTrace::add_dwell(std::uint32_t category, SimTime from, SimTime to, double rate, Role role) {
  if (closed_) throw EnergyError("trace is closed");
  if (category >= categories_.size()) throw EnergyError("unknown trace category");
  if (to < from) throw EnergyError("dwell ends before it starts");
  if (from < SimTime{0}) throw EnergyError("dwell starts before time zero");
  if (!rate_set_[category]) {
    rates_[category] = rate;
    rate_set_[category] = true;
  } else if (rates_[category] != rate) {
    throw EnergyError("category '" + categories_[category] + "' charged at two different rates");
  }
  if (to == from) return;
  if (keep_entries_) {
    entries_.push_back(Entry{from, category, role, rate * sim::to_seconds(to - from)});
  }
  const auto r = static_cast<std::size_t>(role);
  SimTime t = from;
  auto b = static_cast<std::size_t>(t / width_);
  while (t < to) {
    const SimTime boundary = width_ * static_cast<std::int64_t>(b + 1);
    const SimTime piece_end = std::min(to, boundary);
    cell(b, category).ns[r] += (piece_end - t).count();
    t = piece_end;
    ++b;
  }
}

void EnergyTrace::add_amount(std::uint32_t category, SimTime at, double amount, Role role) {
  if (closed_) throw EnergyError("trace is closed");
  if (category >= categories_.size()) throw EnergyError("unknown trace category");
  if (keep_entries_) entries_.push_back(Entry{at, category, role, amount});
  const auto b = static_cast<std::size_t>(at / width_);
  cell(b, category).amount[static_cast<std::size_t>(role)] += amount;
}

void EnergyTrace::close(SimTime end) {
  closed_ = true;
  end_ = end;
  if (bucket_count() > buckets_.size()) {
    buckets_.resize(bucket_count(), std::vector<Cell>(categories_.size()));
  }
}

std::size_t EnergyTrace::bucket_count() const {
  if (!closed_) return buckets_.size();
  const auto full = static_cast<std::size_t>(end_ / width_);
  const bool partial = end_ % width_ != SimTime{0};
  return std::max(full + (partial ? 1 : 0), buckets_.size());
}

double EnergyTrace::cell_quantity(const Cell& c, std::uint32_t category, std::size_t role) const {
  double q = c.amount[role];
  if (c.ns[role] != 0) q += rates_[category] * (static_cast<double>(c.ns[role]) * 1e-9);
  return q;
}

double EnergyTrace::bucket_energy(std::size_t bucket, std::uint32_t category) const {
  const Cell* c = find_cell(bucket, category);
  if (c == nullptr) return 0.0;
  std::int64_t ns = 0;
  double amount = 0.0;
  for (std::size_t r = 0; r < kRoleCount; ++r) {
    ns += c->ns[r];
    amount += c->amount[r];
  }
  double q = amount;
  if (ns != 0) q += rates_[category] * (static_cast<double>(ns) * 1e-9);
  return q * unit_to_joules_;
}

double EnergyTrace::bucket_energy(std::size_t bucket, std::uint32_t category, Role role) const {
  const Cell* c = find_cell(bucket, category);
  if (c == nullptr) return 0.0;
  return cell_quantity(*c, category, static_cast<std::size_t>(role)) * unit_to_joules_;
}

double EnergyTrace::category_quantity(std::uint32_t category) const {
  return category_total(category) / unit_to_joules_;
}

double EnergyTrace::category_total(std::uint32_t category) const {
  double sum = 0.0;
  for (std::size_t b = 0; b < buckets_.size(); ++b) sum += bucket_energy(b, category);
  return sum;
}

double EnergyTrace::total() const {
  double sum = 0.0;
  for (std::uint32_t c = 0; c < categories_.size(); ++c) sum += category_total(c);
  return sum;
}

SimTime EnergyTrace::category_dwell(std::uint32_t category) const {
  std::int64_t ns = 0;
  for (const auto& row : buckets_) {
    if (category < row.size()) {
      for (auto v : row[category].ns) ns += v;
    }
  }
  return SimTime{ns};
}

double IntervalReport::interval_total(std::size_t index) const {
  double sum = 0.0;
  for (double v : buckets.at(index)) sum += v;
  return sum;
}

IntervalReport energy_report(const EnergyTrace& trace, SimTime interval) {
  if (!trace.closed()) throw EnergyError("energy report requires a closed trace");
  if (interval <= SimTime{0} || interval % trace.bucket_width() != SimTime{0}) {
    throw EnergyError("report interval must be a positive multiple of the trace resolution");
  }
  const auto factor = static_cast<std::size_t>(interval / trace.bucket_width());
  const std::size_t n_cat = trace.categories().size();
  const std::size_t n_fine = trace.bucket_count();

  IntervalReport report;
  report.interval = interval;
  report.categories = trace.categories();
  report.buckets.assign((n_fine + factor - 1) / factor, std::vector<double>(n_cat, 0.0));
  report.category_totals.assign(n_cat, 0.0);
  for (std::size_t b = 0; b < n_fine; ++b) {
    for (std::uint32_t c = 0; c < n_cat; ++c) {
      report.buckets[b / factor][c] += trace.bucket_energy(b, c);
    }
  }
  for (const auto& row : report.buckets) {
    for (std::size_t c = 0; c < n_cat; ++c) report.category_totals[c] += row[c];
  }
  for (double t : report.category_totals) report.total += t;
  return report;
}

}  // namespace wsn::energy
