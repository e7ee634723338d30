#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "wsn/sim/engine.hpp"

namespace wsn::medium {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s

enum class PathLossModel { FreeSpace, TwoRayGround, LogNormalShadowing };

std::string_view to_string(PathLossModel model);
PathLossModel path_loss_model_from_string(std::string_view name);

class PropagationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PathLossParams {
  PathLossModel model = PathLossModel::FreeSpace;
  double tx_gain = 1.0;
  double rx_gain = 1.0;
  double frequency_hz = 2.4e9;
  // two-ray ground
  double tx_height_m = 1.5;
  double rx_height_m = 1.5;
  // log-normal shadowing
  double reference_distance_m = 1.0;
  // Loss at the reference distance. Defaults to the free-space loss at d0.
  std::optional<double> reference_loss_db;
  double exponent = 2.0;
  double sigma_db = 0.0;

  double wavelength() const { return kSpeedOfLight / frequency_hz; }
  void validate() const;
};

struct LinkBudget {
  double tx_power_w = 0.0;
  double rx_power_w = 0.0;
  double distance_m = 0.0;
  double delay_s = 0.0;
};

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

/// Friis: Pt * Gt * Gr * (lambda / (4 pi d))^2.
double free_space_rx_power(double tx_power_w, const PathLossParams& params, double distance_m);

/// Distance at which the two-ray d^-4 law meets Friis: 4 pi ht hr / lambda.
double crossover_distance(const PathLossParams& params);

/// Pt * Gt * Gr * ht^2 * hr^2 / d^4, without the near-field switch.
double two_ray_formula(double tx_power_w, const PathLossParams& params, double distance_m);

/// Two-ray ground reflection: Friis below the crossover distance, d^-4 above.
double two_ray_ground_rx_power(double tx_power_w, const PathLossParams& params, double distance_m);

/// Reference loss PL(d0) in dB (explicit value or free-space loss at d0).
double reference_loss_db(const PathLossParams& params);

/// PL(d0) + 10 n log10(d / d0) + shadowing.
double log_normal_path_loss_db(const PathLossParams& params, double distance_m, double shadowing_db);

/// Received power under the configured model. shadowing_db is ignored by
/// deterministic models.
double rx_power(double tx_power_w, const PathLossParams& params, double distance_m,
                double shadowing_db = 0.0);

double propagation_delay(double distance_m);

bool in_range(double tx_power_w, const PathLossParams& params, double distance_m,
              double sensitivity_w, double shadowing_db = 0.0);

LinkBudget link_budget(double tx_power_w, const PathLossParams& params, double distance_m,
                       double shadowing_db = 0.0);

/// Per-link shadowing draws, frozen for the duration of a run.
///
/// The draw for the unordered pair {a, b} comes from its own stream, seeded
/// from (run seed, pair index), so it does not depend on query order.
class ShadowingField {
 public:
  ShadowingField(std::uint64_t run_seed, double sigma_db);

  double draw(sim::NodeId a, sim::NodeId b) const;

 private:
  std::uint64_t run_seed_;
  double sigma_db_;
};

}  // namespace wsn::medium
