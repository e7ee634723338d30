#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wsn::evalkit {

/// Schema violations, reported with the JSON pointer of the field.
class DescriptorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Nature { Simulator, Emulator };
enum class SimType { DiscreteEvent, Continuous, Hybrid };
enum class DesignPhilosophy { SingleLevel, MultiLevel, CrossLevel };
enum class BatteryModel { None, Ideal, Full };

std::string_view to_string(Nature v);
std::string_view to_string(SimType v);
std::string_view to_string(DesignPhilosophy v);
std::string_view to_string(BatteryModel v);

struct UserInterface {
  bool gui = false;
  std::string gui_tool;  // empty: built in
  std::vector<std::string> languages;
  bool operator==(const UserInterface&) const = default;
};

struct EnergySupport {
  BatteryModel battery = BatteryModel::None;
  bool rf_states = false;
  bool harvester = false;
  std::string limitations;  // verbatim prose
  bool operator==(const EnergySupport&) const = default;
};

using ProtocolLayer = std::pair<std::string, std::vector<std::string>>;

/// Qualitative profile of one simulator, one field per comparison criterion.
struct SimulatorDescriptor {
  std::string name;
  Nature nature = Nature::Simulator;
  SimType sim_type = SimType::DiscreteEvent;
  std::string license;
  UserInterface ui;
  std::vector<std::string> platforms;
  bool heterogeneity = false;
  DesignPhilosophy design_philosophy = DesignPhilosophy::SingleLevel;
  bool modelling = false;
  bool mobility = false;
  std::string mobility_note;
  std::vector<std::string> medium_models;  // path loss
  std::vector<std::string> other_medium_models;
  EnergySupport energy;
  std::vector<ProtocolLayer> protocols;  // layer -> names, in file order
  std::string protocols_note;            // prose used when no layers are listed
  std::string notes;                     // carried along, not part of the comparison

  bool operator==(const SimulatorDescriptor&) const = default;

  /// Throws DescriptorError when an invariant does not hold.
  void validate() const;
};

SimulatorDescriptor parse_descriptor(std::string_view text, std::string_view source = "<string>");
SimulatorDescriptor load_descriptor(const std::filesystem::path& path);
std::string to_json(const SimulatorDescriptor& d);

/// Criteria in report order.
const std::vector<std::string>& criteria();

struct ComparisonTable {
  std::vector<std::string> simulators;
  std::vector<std::string> criteria;
  std::vector<std::vector<std::string>> cells;  // [criterion][simulator]

  const std::string& cell(std::string_view criterion, std::string_view simulator) const;
  std::string to_markdown() const;
};

/// Requires at least two descriptors.
ComparisonTable comparison_table(const std::vector<SimulatorDescriptor>& descriptors);

/// The text shown for one criterion of one descriptor.
std::string criterion_cell(const SimulatorDescriptor& d, std::string_view criterion);

}  // namespace wsn::evalkit
