#include "wsn/evalkit/descriptor.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace wsn::evalkit {

using json = nlohmann::ordered_json;

namespace {

template <typename E, std::size_t N>
using Names = std::array<std::pair<E, std::string_view>, N>;

constexpr Names<Nature, 2> kNature{{{Nature::Simulator, "simulator"}, {Nature::Emulator, "emulator"}}};
constexpr Names<SimType, 3> kSimType{{{SimType::DiscreteEvent, "discrete-event"},
                                      {SimType::Continuous, "continuous"},
                                      {SimType::Hybrid, "hybrid"}}};
constexpr Names<DesignPhilosophy, 3> kPhilosophy{{{DesignPhilosophy::SingleLevel, "single-level"},
                                                  {DesignPhilosophy::MultiLevel, "multi-level"},
                                                  {DesignPhilosophy::CrossLevel, "cross-level"}}};
constexpr Names<BatteryModel, 3> kBattery{
    {{BatteryModel::None, "none"}, {BatteryModel::Ideal, "ideal"}, {BatteryModel::Full, "full"}}};

template <typename E, std::size_t N>
std::string_view name_of(const Names<E, N>& names, E v) {
  for (const auto& [e, s] : names) {
    if (e == v) return s;
  }
  throw std::logic_error("unnamed enum value");
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

class Reader {
 public:
  Reader(const json& obj, std::string path, std::string_view source)
      : obj_(obj), path_(std::move(path)), source_(source) {
    if (!obj_.is_object()) fail(path_.empty() ? "/" : path_, "expected an object");
  }

  [[noreturn]] void fail(const std::string& field, const std::string& what) const {
    throw DescriptorError(std::string(source_) + ": field '" + field + "': " + what);
  }

  std::string at(std::string_view key) const { return path_ + "/" + std::string(key); }

  const json* find(std::string_view key, bool required) {
    seen_.insert(std::string(key));
    auto it = obj_.find(std::string(key));
    if (it == obj_.end() || it->is_null()) {
      if (required) fail(at(key), "missing required field");
      return nullptr;
    }
    return &*it;
  }

  std::string text(std::string_view key, bool required = true) {
    const json* v = find(key, required);
    if (!v) return {};
    if (!v->is_string()) fail(at(key), "expected a string");
    return v->get<std::string>();
  }

  bool flag(std::string_view key) {
    const json* v = find(key, true);
    if (!v->is_boolean()) fail(at(key), "expected true or false");
    return v->get<bool>();
  }

  std::vector<std::string> list(const json* v, const std::string& field) const {
    std::vector<std::string> out;
    if (!v) return out;
    if (!v->is_array()) fail(field, "expected an array of strings");
    for (std::size_t i = 0; i < v->size(); ++i) {
      if (!(*v)[i].is_string()) fail(field + "/" + std::to_string(i), "expected a string");
      out.push_back((*v)[i].get<std::string>());
    }
    return out;
  }

  std::vector<std::string> list(std::string_view key, bool required = false) {
    return list(find(key, required), at(key));
  }

  template <typename E, std::size_t N>
  E choice(std::string_view key, const Names<E, N>& names) {
    const std::string s = text(key);
    for (const auto& [e, n] : names) {
      if (n == s) return e;
    }
    std::string allowed;
    for (const auto& [e, n] : names) allowed += (allowed.empty() ? "" : ", ") + std::string(n);
    fail(at(key), "unknown value \"" + s + "\" (expected one of: " + allowed + ")");
  }

  Reader child(std::string_view key) { return Reader(*find(key, true), at(key), source_); }

  void reject_unknown() const {
    for (const auto& [key, value] : obj_.items()) {
      if (!seen_.count(key)) fail(at(key), "unknown field");
    }
  }

  const json& raw() const { return obj_; }
  const std::string& path() const { return path_; }

 private:
  const json& obj_;
  std::string path_;
  std::string_view source_;
  std::set<std::string> seen_;
};

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

// "a, b and c"
std::string join_and(const std::vector<std::string>& items) {
  if (items.size() < 2) return join(items, "");
  std::vector<std::string> head(items.begin(), items.end() - 1);
  return join(head, ", ") + " and " + items.back();
}

std::string yes_no(bool v) { return v ? "Yes" : "No"; }

std::string capitalized(std::string_view s) {
  std::string out(s);
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

std::string battery_cell(BatteryModel b) {
  switch (b) {
    case BatteryModel::None: return "No";
    case BatteryModel::Ideal: return "Only for Ideal Battery";
    case BatteryModel::Full: return "Yes";
  }
  return {};
}

}  // namespace

std::string_view to_string(Nature v) { return name_of(kNature, v); }
std::string_view to_string(SimType v) { return name_of(kSimType, v); }
std::string_view to_string(DesignPhilosophy v) { return name_of(kPhilosophy, v); }
std::string_view to_string(BatteryModel v) { return name_of(kBattery, v); }

void SimulatorDescriptor::validate() const {
  if (name.empty()) throw DescriptorError("field '/name': must not be empty");
  const std::string lim = lower(energy.limitations);
  const bool lacks_harvesting = lim.find("harvest") != std::string::npos &&
                                (lim.find("cannot") != std::string::npos || lim.find("not ") != std::string::npos ||
                                 lim.find("no ") != std::string::npos);
  if (lacks_harvesting && energy.harvester) {
    throw DescriptorError("field '/energy/harvester': must be false when the limitations rule out harvesting");
  }
  for (const auto& [layer, items] : protocols) {
    if (layer.empty()) throw DescriptorError("field '/protocols': empty layer name");
  }
}

SimulatorDescriptor parse_descriptor(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DescriptorError(std::string(source) + ": " + e.what());
  }

  Reader root(doc, "", source);
  SimulatorDescriptor d;
  d.name = root.text("name");
  d.nature = root.choice("nature", kNature);
  d.sim_type = root.choice("sim_type", kSimType);
  d.license = root.text("license");
  {
    Reader ui = root.child("ui");
    d.ui.gui = ui.flag("gui");
    d.ui.gui_tool = ui.text("gui_tool", false);
    d.ui.languages = ui.list("languages");
    ui.reject_unknown();
  }
  d.platforms = root.list("platforms", true);
  d.heterogeneity = root.flag("heterogeneity");
  d.design_philosophy = root.choice("design_philosophy", kPhilosophy);
  d.modelling = root.flag("modelling");
  d.mobility = root.flag("mobility");
  d.mobility_note = root.text("mobility_note", false);
  d.medium_models = root.list("medium_models");
  d.other_medium_models = root.list("other_medium_models");
  {
    Reader e = root.child("energy");
    d.energy.battery = e.choice("battery", kBattery);
    d.energy.rf_states = e.flag("rf_states");
    d.energy.harvester = e.flag("harvester");
    d.energy.limitations = e.text("limitations", false);
    e.reject_unknown();
  }
  if (const json* p = root.find("protocols", false)) {
    Reader layers(*p, root.at("protocols"), source);
    for (const auto& [layer, items] : p->items()) {
      d.protocols.emplace_back(layer, layers.list(layer));
    }
    layers.reject_unknown();
  }
  d.protocols_note = root.text("protocols_note", false);
  d.notes = root.text("notes", false);
  root.reject_unknown();

  try {
    d.validate();
  } catch (const DescriptorError& e) {
    throw DescriptorError(std::string(source) + ": " + e.what());
  }
  return d;
}

SimulatorDescriptor load_descriptor(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DescriptorError(path.string() + ": cannot open descriptor file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_descriptor(buf.str(), path.string());
}

std::string to_json(const SimulatorDescriptor& d) {
  json j;
  j["name"] = d.name;
  j["nature"] = to_string(d.nature);
  j["sim_type"] = to_string(d.sim_type);
  j["license"] = d.license;
  j["ui"]["gui"] = d.ui.gui;
  if (!d.ui.gui_tool.empty()) j["ui"]["gui_tool"] = d.ui.gui_tool;
  j["ui"]["languages"] = d.ui.languages;
  j["platforms"] = d.platforms;
  j["heterogeneity"] = d.heterogeneity;
  j["design_philosophy"] = to_string(d.design_philosophy);
  j["modelling"] = d.modelling;
  j["mobility"] = d.mobility;
  if (!d.mobility_note.empty()) j["mobility_note"] = d.mobility_note;
  j["medium_models"] = d.medium_models;
  if (!d.other_medium_models.empty()) j["other_medium_models"] = d.other_medium_models;
  j["energy"]["battery"] = to_string(d.energy.battery);
  j["energy"]["rf_states"] = d.energy.rf_states;
  j["energy"]["harvester"] = d.energy.harvester;
  j["energy"]["limitations"] = d.energy.limitations;
  if (!d.protocols.empty()) {
    json layers = json::object();
    for (const auto& [layer, items] : d.protocols) layers[layer] = items;
    j["protocols"] = std::move(layers);
  }
  if (!d.protocols_note.empty()) j["protocols_note"] = d.protocols_note;
  if (!d.notes.empty()) j["notes"] = d.notes;
  return j.dump(2) + "\n";
}

const std::vector<std::string>& criteria() {
  static const std::vector<std::string> list{
      "Nature of the simulator", "Type of the simulator", "License",
      "User Interface",          "Supported platforms",   "Heterogeneity",
      "Design philosophy",       "Modelling",             "Mobility model",
      "Wireless medium model",   "Energy model",          "Supported technology and protocols",
  };
  return list;
}

std::string criterion_cell(const SimulatorDescriptor& d, std::string_view criterion) {
  if (criterion == "Nature of the simulator") return capitalized(to_string(d.nature));
  if (criterion == "Type of the simulator") return std::string(to_string(d.sim_type));
  if (criterion == "License") return d.license;
  if (criterion == "User Interface") {
    std::string gui = !d.ui.gui               ? "GUI: none."
                      : d.ui.gui_tool.empty() ? "GUI: a built-in GUI is available"
                                              : "GUI: through " + d.ui.gui_tool + ".";
    return gui + " Supported languages: " + join_and(d.ui.languages);
  }
  if (criterion == "Supported platforms") return join_and(d.platforms);
  if (criterion == "Heterogeneity") return yes_no(d.heterogeneity);
  if (criterion == "Design philosophy") return std::string(to_string(d.design_philosophy));
  if (criterion == "Modelling") return d.modelling ? "Available" : "Not available";
  if (criterion == "Mobility model") {
    return d.mobility_note.empty() ? yes_no(d.mobility) : yes_no(d.mobility) + ", " + d.mobility_note;
  }
  if (criterion == "Wireless medium model") {
    std::string out = "Path loss models: " + join(d.medium_models, ", ");
    if (!d.other_medium_models.empty()) out += " Other models: " + join(d.other_medium_models, ", ");
    return out;
  }
  if (criterion == "Energy model") {
    std::string out = "Battery model: " + battery_cell(d.energy.battery) + " RF states: " + yes_no(d.energy.rf_states);
    if (!d.energy.limitations.empty()) out += " Limitations: " + d.energy.limitations;
    return out;
  }
  if (criterion == "Supported technology and protocols") {
    std::vector<std::string> parts;
    if (!d.protocols_note.empty()) parts.push_back(d.protocols_note);
    for (const auto& [layer, items] : d.protocols) parts.push_back(layer + ": " + join(items, ", "));
    return join(parts, " ");
  }
  throw std::invalid_argument("unknown criterion: " + std::string(criterion));
}

const std::string& ComparisonTable::cell(std::string_view criterion, std::string_view simulator) const {
  const auto r = std::find(criteria.begin(), criteria.end(), criterion);
  const auto c = std::find(simulators.begin(), simulators.end(), simulator);
  if (r == criteria.end() || c == simulators.end()) {
    throw std::out_of_range("no cell for " + std::string(criterion) + " / " + std::string(simulator));
  }
  return cells[r - criteria.begin()][c - simulators.begin()];
}

std::string ComparisonTable::to_markdown() const {
  auto escape = [](const std::string& s) {
    std::string out;
    for (char ch : s) {
      if (ch == '|') out += '\\';
      out += ch;
    }
    return out;
  };
  std::string out = "| Criterion |";
  for (const auto& s : simulators) out += " " + escape(s) + " |";
  out += "\n|---|";
  for (std::size_t i = 0; i < simulators.size(); ++i) out += "---|";
  out += "\n";
  for (std::size_t r = 0; r < criteria.size(); ++r) {
    out += "| " + criteria[r] + " |";
    for (const auto& c : cells[r]) out += " " + escape(c) + " |";
    out += "\n";
  }
  return out;
}

ComparisonTable comparison_table(const std::vector<SimulatorDescriptor>& descriptors) {
  if (descriptors.size() < 2) throw std::invalid_argument("comparison needs at least two descriptors");
  ComparisonTable t;
  t.criteria = criteria();
  for (const auto& d : descriptors) t.simulators.push_back(d.name);
  for (const auto& c : t.criteria) {
    std::vector<std::string> row;
    for (const auto& d : descriptors) row.push_back(criterion_cell(d, c));
    t.cells.push_back(std::move(row));
  }
  return t;
}

}  // namespace wsn::evalkit
