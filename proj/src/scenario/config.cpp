#include "wsn/scenario/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "wsn/mac/phy_profile.hpp"

namespace wsn::scenario {

using nlohmann::json;

std::string_view to_string(ScenarioKind kind) { return kind == ScenarioKind::Ping ? "ping" : "mesh"; }

void ScenarioConfig::set_seed(std::uint64_t seed) {
  ping.seed = seed;
  mesh.seed = seed;
}

namespace {

// Field access with JSON-pointer diagnostics.
class Fields {
 public:
  Fields(const json& obj, std::string path, std::string_view source)
      : obj_(obj), path_(std::move(path)), source_(source) {
    if (!obj_.is_object()) fail(path_.empty() ? "/" : path_, "expected an object");
  }

  [[noreturn]] void fail(const std::string& field, const std::string& what) const {
    throw ConfigError(std::string(source_) + ": field '" + field + "': " + what);
  }

  std::string at(std::string_view key) const { return path_ + "/" + std::string(key); }

  bool has(std::string_view key) {
    seen_.insert(std::string(key));
    return obj_.contains(key) && !obj_.at(std::string(key)).is_null();
  }

  double number(std::string_view key, double fallback) {
    if (!has(key)) return fallback;
    const json& v = obj_.at(std::string(key));
    if (!v.is_number()) fail(at(key), "expected a number");
    return v.get<double>();
  }

  std::optional<double> optional_number(std::string_view key) {
    if (!has(key)) return std::nullopt;
    return number(key, 0.0);
  }

  std::uint64_t unsigned_int(std::string_view key, std::uint64_t fallback) {
    if (!has(key)) return fallback;
    const json& v = obj_.at(std::string(key));
    if (!v.is_number_unsigned()) fail(at(key), "expected a non-negative integer");
    return v.get<std::uint64_t>();
  }

  std::string string(std::string_view key, std::string fallback) {
    if (!has(key)) return fallback;
    const json& v = obj_.at(std::string(key));
    if (!v.is_string()) fail(at(key), "expected a string");
    return v.get<std::string>();
  }

  Fields child(std::string_view key) {
    seen_.insert(std::string(key));
    return Fields(obj_.at(std::string(key)), at(key), source_);
  }

  const json& raw(std::string_view key) const { return obj_.at(std::string(key)); }

  void reject_unknown() const {
    for (const auto& [key, value] : obj_.items()) {
      if (!seen_.count(key)) fail(at(key), "unknown field");
    }
  }

 private:
  const json& obj_;
  std::string path_;
  std::string_view source_;
  std::set<std::string> seen_;
};

template <typename F>
auto checked(const Fields& f, const std::string& field, F&& fn) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    f.fail(field, e.what());
  }
}

}  // namespace

ScenarioConfig parse_scenario(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports "... at line L, column C: ..." in what().
    throw ConfigError(std::string(source) + ": " + e.what());
  }

  Fields root(doc, "", source);
  ScenarioConfig cfg;
  cfg.name = root.string("name", "scenario");
  const std::string type = root.string("type", "ping");
  if (type == "ping") {
    cfg.kind = ScenarioKind::Ping;
  } else if (type == "mesh") {
    cfg.kind = ScenarioKind::Mesh;
  } else {
    root.fail("/type", "expected \"ping\" or \"mesh\"");
  }

  const std::string profile = root.string("profile", "dot11b/ns2");
  checked(root, "/profile", [&] { return mac::profile_by_name(profile); });
  const auto seed = root.unsigned_int("seed", 1);
  const auto payload = static_cast<std::uint32_t>(root.unsigned_int("payload_bytes", 10));
  const double freq = root.number("frequency_hz", 1.0);

  std::optional<energy::RadioPowerTable> power;
  if (root.has("radio_power_w")) {
    Fields p = root.child("radio_power_w");
    energy::RadioPowerTable t;
    t.tx_w = p.number("tx", 0.0);
    t.rx_w = p.number("rx", 0.0);
    t.sleep_w = p.number("sleep", 0.0);
    t.idle_w = p.number("idle", 0.0);
    p.reject_unknown();
    checked(p, p.at(""), [&] {
      t.validate();
      return 0;
    });
    power = t;
  }

  if (cfg.kind == ScenarioKind::Ping) {
    cfg.ping.profile = profile;
    cfg.ping.seed = seed;
    cfg.ping.payload_bytes = payload;
    cfg.ping.frequency_hz = freq;
    cfg.ping.duration_s = root.number("duration_s", 100.0);
    cfg.ping.distance_m = root.number("distance_m", 10.0);
    cfg.ping.power = power;
    checked(root, "/", [&] {
      cfg.ping.validate();
      return 0;
    });
  } else {
    cfg.mesh.profile = profile;
    cfg.mesh.seed = seed;
    cfg.mesh.payload_bytes = payload;
    cfg.mesh.frequency_hz = freq;
    cfg.mesh.bc_count = static_cast<std::uint32_t>(root.unsigned_int("bc_count", 1));
    cfg.mesh.rounds = static_cast<std::uint32_t>(root.unsigned_int("rounds", 100));
    cfg.mesh.power = power;
    checked(root, "/", [&] {
      cfg.mesh.validate();
      return 0;
    });
  }

  const std::string model = root.string("model", "sm");
  cfg.model = checked(root, "/model", [&] { return energy::model_kind_from_string(model); });
  cfg.energy.power = cfg.kind == ScenarioKind::Ping ? cfg.ping.power_table() : cfg.mesh.power_table();

  if (root.has("energy")) {
    Fields e = root.child("energy");
    cfg.energy.initial_energy_j = e.number("initial_j", cfg.energy.initial_energy_j);
    cfg.energy.aux_power_w = e.number("aux_power_w", 0.0);
    const std::string mode = e.string("unit_mode", "power-energy");
    cfg.energy.unit_mode = checked(e, e.at("unit_mode"), [&] { return energy::unit_mode_from_string(mode); });
    cfg.energy.nominal_voltage_v = e.number("voltage_v", cfg.energy.nominal_voltage_v);
    cfg.energy.regulator_efficiency = e.number("efficiency", 1.0);
    cfg.energy.capacity = e.optional_number("capacity");
    cfg.energy.harvester = e.optional_number("harvester");
    e.reject_unknown();
    if (!(cfg.energy.initial_energy_j >= 0)) e.fail(e.at("initial_j"), "must be >= 0");
    if (!(cfg.energy.aux_power_w >= 0)) e.fail(e.at("aux_power_w"), "must be >= 0");
    if (!(cfg.energy.nominal_voltage_v > 0)) e.fail(e.at("voltage_v"), "must be > 0");
    if (!(cfg.energy.regulator_efficiency > 0 && cfg.energy.regulator_efficiency <= 1)) {
      e.fail(e.at("efficiency"), "must be in (0, 1]");
    }
    if (cfg.energy.harvester && cfg.model != energy::ModelKind::Hierarchical) {
      e.fail(e.at("harvester"), "harvesters are only supported by the hierarchical model");
    }
  }

  if (root.has("activity_costs_j")) {
    Fields c = root.child("activity_costs_j");
    for (const auto& [key, value] : root.raw("activity_costs_j").items()) {
      const auto activity = energy::parse_component_activity(std::string_view(key));
      if (!activity) c.fail(c.at(key), "unknown activity");
      cfg.energy.activity_costs.set(*activity, c.number(key, 0.0));
    }
    c.reject_unknown();
  }

  if (root.has("medium")) {
    Fields m = root.child("medium");
    const std::string model_name = m.string("model", "free-space");
    cfg.path_loss.model =
        checked(m, m.at("model"), [&] { return medium::path_loss_model_from_string(model_name); });
    cfg.path_loss.frequency_hz = m.number("frequency_hz", cfg.path_loss.frequency_hz);
    cfg.path_loss.tx_gain = m.number("tx_gain", cfg.path_loss.tx_gain);
    cfg.path_loss.rx_gain = m.number("rx_gain", cfg.path_loss.rx_gain);
    cfg.path_loss.tx_height_m = m.number("tx_height_m", cfg.path_loss.tx_height_m);
    cfg.path_loss.rx_height_m = m.number("rx_height_m", cfg.path_loss.rx_height_m);
    cfg.path_loss.reference_distance_m = m.number("reference_distance_m", cfg.path_loss.reference_distance_m);
    cfg.path_loss.reference_loss_db = m.optional_number("reference_loss_db");
    cfg.path_loss.exponent = m.number("exponent", cfg.path_loss.exponent);
    cfg.path_loss.sigma_db = m.number("sigma_db", cfg.path_loss.sigma_db);
    cfg.sensitivity_dbm = m.number("sensitivity_dbm", cfg.sensitivity_dbm);
    m.reject_unknown();
    checked(m, m.at(""), [&] {
      cfg.path_loss.validate();
      return 0;
    });
  }

  // Keys belonging to the other scenario type are still recognised so that
  // the error names the actual problem.
  if (cfg.kind == ScenarioKind::Ping) {
    for (const char* k : {"bc_count", "rounds"}) {
      if (root.has(k)) root.fail(root.at(k), "only valid for mesh scenarios");
    }
  } else {
    for (const char* k : {"duration_s", "distance_m"}) {
      if (root.has(k)) root.fail(root.at(k), "only valid for ping scenarios");
    }
  }
  root.reject_unknown();
  return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string() + ": cannot open scenario file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path.string());
}

std::string to_json(const ScenarioConfig& cfg) {
  json j;
  j["name"] = cfg.name;
  j["type"] = std::string(to_string(cfg.kind));
  j["profile"] = cfg.profile();
  j["seed"] = cfg.seed();
  j["payload_bytes"] = cfg.payload_bytes();
  j["frequency_hz"] = cfg.frequency_hz();
  energy::RadioPowerTable power;
  if (cfg.kind == ScenarioKind::Ping) {
    j["duration_s"] = cfg.ping.duration_s;
    j["distance_m"] = cfg.ping.distance_m;
    power = cfg.ping.power_table();
  } else {
    j["bc_count"] = cfg.mesh.bc_count;
    j["rounds"] = cfg.mesh.rounds;
    power = cfg.mesh.power_table();
  }
  j["model"] = std::string(energy::to_string(cfg.model));
  j["radio_power_w"] = {{"tx", power.tx_w}, {"rx", power.rx_w}, {"sleep", power.sleep_w}, {"idle", power.idle_w}};
  json e;
  e["initial_j"] = cfg.energy.initial_energy_j;
  e["aux_power_w"] = cfg.energy.aux_power_w;
  e["unit_mode"] = std::string(energy::to_string(cfg.energy.unit_mode));
  e["voltage_v"] = cfg.energy.nominal_voltage_v;
  e["efficiency"] = cfg.energy.regulator_efficiency;
  if (cfg.energy.capacity) e["capacity"] = *cfg.energy.capacity;
  if (cfg.energy.harvester) e["harvester"] = *cfg.energy.harvester;
  j["energy"] = e;
  json costs = json::object();
  for (std::size_t i = 0; i < energy::kComponentActivityCount; ++i) {
    const auto a = static_cast<energy::ComponentActivity>(i);
    if (auto c = cfg.energy.activity_costs.cost(a)) costs[std::string(energy::to_string(a))] = *c;
  }
  j["activity_costs_j"] = costs;
  json m;
  m["model"] = std::string(medium::to_string(cfg.path_loss.model));
  m["frequency_hz"] = cfg.path_loss.frequency_hz;
  m["tx_gain"] = cfg.path_loss.tx_gain;
  m["rx_gain"] = cfg.path_loss.rx_gain;
  m["tx_height_m"] = cfg.path_loss.tx_height_m;
  m["rx_height_m"] = cfg.path_loss.rx_height_m;
  m["reference_distance_m"] = cfg.path_loss.reference_distance_m;
  if (cfg.path_loss.reference_loss_db) m["reference_loss_db"] = *cfg.path_loss.reference_loss_db;
  m["exponent"] = cfg.path_loss.exponent;
  m["sigma_db"] = cfg.path_loss.sigma_db;
  m["sensitivity_dbm"] = cfg.sensitivity_dbm;
  j["medium"] = m;
  return j.dump(2) + "\n";
}

ScenarioConfig make_ping_config(const PingScenario& ping, energy::ModelKind model) {
  ScenarioConfig cfg;
  cfg.kind = ScenarioKind::Ping;
  cfg.ping = ping;
  cfg.model = model;
  cfg.energy.power = ping.power_table();
  std::ostringstream name;
  name << "ping-" << ping.profile << "-" << ping.payload_bytes << "B-" << ping.frequency_hz << "Hz";
  cfg.name = name.str();
  return cfg;
}

ScenarioConfig make_mesh_config(const MeshScenario& mesh, energy::ModelKind model) {
  ScenarioConfig cfg;
  cfg.kind = ScenarioKind::Mesh;
  cfg.mesh = mesh;
  cfg.model = model;
  cfg.energy.power = mesh.power_table();
  cfg.name = "mesh-bc" + std::to_string(mesh.bc_count);
  return cfg;
}

}  // namespace wsn::scenario
