#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wsn/energy/power_table.hpp"
#include "wsn/sim/time.hpp"

namespace wsn::energy {

using sim::SimTime;

/// Part a node played in the MAC exchange during which energy was spent:
/// the initiator sends the data frame, the responder acknowledges it.
enum class Role : std::uint8_t { None, Initiator, Responder };

inline constexpr std::size_t kRoleCount = 3;

std::string_view to_string(Role role);

/// Per-node energy bookkeeping, bucketed at a fixed time resolution.
///
/// Time-proportional charges are stored as integer nanoseconds per
/// (bucket, category, role) together with the category's constant rate, and
/// converted to energy on read. Bucket values therefore depend only on total
/// dwell, not on the order or splitting of the charges.
///
/// `unit_to_joules` converts the stored quantity to joules (1 for joules,
/// the nominal voltage for coulombs).
class EnergyTrace {
 public:
  struct Entry {
    SimTime time{0};
    std::uint32_t category = 0;
    Role role = Role::None;
    double delta = 0.0;  // in stored units
  };

  explicit EnergyTrace(SimTime bucket_width, double unit_to_joules = 1.0, bool keep_entries = false);

  /// Index of a category, registering it if new.
  std::uint32_t category(std::string_view name);
  const std::vector<std::string>& categories() const { return categories_; }

  /// Charges `rate` (per second) over [from, to). The rate of a category is
  /// fixed by its first dwell.
  void add_dwell(std::uint32_t category, SimTime from, SimTime to, double rate, Role role = Role::None);
  /// Charges a lump amount at `at`.
  void add_amount(std::uint32_t category, SimTime at, double amount, Role role = Role::None);

  void close(SimTime end);
  bool closed() const { return closed_; }
  SimTime end() const { return end_; }

  SimTime bucket_width() const { return width_; }
  std::size_t bucket_count() const;
  double unit_to_joules() const { return unit_to_joules_; }

  /// Energy in joules.
  double bucket_energy(std::size_t bucket, std::uint32_t category) const;
  double bucket_energy(std::size_t bucket, std::uint32_t category, Role role) const;
  /// Stored quantity (J or C) for the category across all buckets.
  double category_quantity(std::uint32_t category) const;
  double category_total(std::uint32_t category) const;
  double total() const;
  SimTime category_dwell(std::uint32_t category) const;

  const std::vector<Entry>& entries() const { return entries_; }

 private:
  struct Cell {
    std::array<std::int64_t, kRoleCount> ns{};
    std::array<double, kRoleCount> amount{};
  };

  Cell& cell(std::size_t bucket, std::uint32_t category);
  const Cell* find_cell(std::size_t bucket, std::uint32_t category) const;
  double cell_quantity(const Cell& c, std::uint32_t category, std::size_t role) const;

  SimTime width_;
  double unit_to_joules_;
  bool keep_entries_;
  bool closed_ = false;
  SimTime end_{0};
  std::vector<std::string> categories_;
  std::vector<double> rates_;
  std::vector<bool> rate_set_;
  std::vector<std::vector<Cell>> buckets_;  // [bucket][category]
  std::vector<Entry> entries_;
};

/// Energy bucketed at a coarser interval, in joules.
struct IntervalReport {
  SimTime interval{0};
  std::vector<std::string> categories;
  std::vector<std::vector<double>> buckets;  // [interval][category]
  std::vector<double> category_totals;
  double total = 0.0;

  double interval_total(std::size_t index) const;
};

/// Requires a closed trace; `interval` must be a positive multiple of the
/// trace's bucket width.
IntervalReport energy_report(const EnergyTrace& trace, SimTime interval);

}  // namespace wsn::energy
