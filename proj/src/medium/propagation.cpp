#include "wsn/medium/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wsn/sim/rng.hpp"

namespace wsn::medium {

std::string_view to_string(PathLossModel model) {
  switch (model) {
    case PathLossModel::FreeSpace: return "free-space";
    case PathLossModel::TwoRayGround: return "two-ray-ground";
    case PathLossModel::LogNormalShadowing: return "log-normal-shadowing";
  }
  return "unknown";
}

PathLossModel path_loss_model_from_string(std::string_view name) {
  if (name == "free-space") return PathLossModel::FreeSpace;
  if (name == "two-ray-ground") return PathLossModel::TwoRayGround;
  if (name == "log-normal-shadowing") return PathLossModel::LogNormalShadowing;
  throw PropagationError("unknown path-loss model '" + std::string(name) + "'");
}

void PathLossParams::validate() const {
  if (!(frequency_hz > 0)) throw PropagationError("frequency must be > 0");
  if (!(tx_gain > 0) || !(rx_gain > 0)) throw PropagationError("antenna gains must be > 0");
  if (!(reference_distance_m > 0)) throw PropagationError("reference distance d0 must be > 0");
  if (!(exponent > 0)) throw PropagationError("path-loss exponent must be > 0");
  if (!(sigma_db >= 0)) throw PropagationError("shadowing sigma must be >= 0");
  if (model == PathLossModel::TwoRayGround && (!(tx_height_m > 0) || !(rx_height_m > 0))) {
    throw PropagationError("antenna heights must be > 0");
  }
}

double dbm_to_watts(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }
double watts_to_dbm(double watts) { return 10.0 * std::log10(watts * 1e3); }

double free_space_rx_power(double tx_power_w, const PathLossParams& params, double distance_m) {
  if (!(distance_m > 0)) throw PropagationError("free-space model is singular at distance 0");
  const double ratio = params.wavelength() / (4.0 * std::numbers::pi * distance_m);
  return tx_power_w * params.tx_gain * params.rx_gain * ratio * ratio;
}

double crossover_distance(const PathLossParams& params) {
  return 4.0 * std::numbers::pi * params.tx_height_m * params.rx_height_m / params.wavelength();
}

double two_ray_formula(double tx_power_w, const PathLossParams& params, double distance_m) {
  if (!(distance_m > 0)) throw PropagationError("two-ray model is singular at distance 0");
  const double hh = params.tx_height_m * params.rx_height_m;
  const double d2 = distance_m * distance_m;
  return tx_power_w * params.tx_gain * params.rx_gain * hh * hh / (d2 * d2);
}

double two_ray_ground_rx_power(double tx_power_w, const PathLossParams& params, double distance_m) {
  if (distance_m < crossover_distance(params)) {
    return free_space_rx_power(tx_power_w, params, distance_m);
  }
  return two_ray_formula(tx_power_w, params, distance_m);
}

double reference_loss_db(const PathLossParams& params) {
  if (params.reference_loss_db) return *params.reference_loss_db;
  const double ratio = 4.0 * std::numbers::pi * params.reference_distance_m / params.wavelength();
  return 20.0 * std::log10(ratio);
}

double log_normal_path_loss_db(const PathLossParams& params, double distance_m, double shadowing_db) {
  if (distance_m < params.reference_distance_m) {
    throw PropagationError("log-normal model requires distance >= d0 (" +
                           std::to_string(params.reference_distance_m) + " m)");
  }
  return reference_loss_db(params) +
         10.0 * params.exponent * std::log10(distance_m / params.reference_distance_m) + shadowing_db;
}

double rx_power(double tx_power_w, const PathLossParams& params, double distance_m, double shadowing_db) {
  switch (params.model) {
    case PathLossModel::FreeSpace:
      return free_space_rx_power(tx_power_w, params, distance_m);
    case PathLossModel::TwoRayGround:
      return two_ray_ground_rx_power(tx_power_w, params, distance_m);
    case PathLossModel::LogNormalShadowing: {
      const double loss_db = log_normal_path_loss_db(params, distance_m, shadowing_db);
      return tx_power_w * params.tx_gain * params.rx_gain * std::pow(10.0, -loss_db / 10.0);
    }
  }
  return 0.0;
}

double propagation_delay(double distance_m) {
  if (distance_m < 0) throw PropagationError("distance must be >= 0");
  return distance_m / kSpeedOfLight;
}

bool in_range(double tx_power_w, const PathLossParams& params, double distance_m,
              double sensitivity_w, double shadowing_db) {
  return rx_power(tx_power_w, params, distance_m, shadowing_db) >= sensitivity_w;
}

LinkBudget link_budget(double tx_power_w, const PathLossParams& params, double distance_m,
                       double shadowing_db) {
  return LinkBudget{tx_power_w, rx_power(tx_power_w, params, distance_m, shadowing_db), distance_m,
                    propagation_delay(distance_m)};
}

ShadowingField::ShadowingField(std::uint64_t run_seed, double sigma_db)
    : run_seed_(sim::splitmix64(run_seed ^ 0x5348414457ULL)), sigma_db_(sigma_db) {}

double ShadowingField::draw(sim::NodeId a, sim::NodeId b) const {
  if (sigma_db_ == 0.0) return 0.0;
  const std::uint64_t lo = std::min(a, b);
  const std::uint64_t hi = std::max(a, b);
  sim::RngStream rng(sim::derive_seed(run_seed_, (hi << 32) | lo));
  return rng.normal(0.0, sigma_db_);
}

}  // namespace wsn::medium
