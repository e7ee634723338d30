#include <string>

#include "doctest.h"
#include "wsn/evalkit/descriptor.hpp"

using namespace wsn::evalkit;

namespace {
SimulatorDescriptor bundled(const std::string& name) {
  return load_descriptor(std::string(WSN_DATA_DIR) + "/descriptors/" + name + ".json");
}

const char* kMinimal = R"({
  "name": "Mini", "nature": "simulator", "sim_type": "discrete-event", "license": "MIT",
  "ui": {"gui": false, "languages": ["C++"]}, "platforms": ["Linux"], "heterogeneity": false,
  "design_philosophy": "single-level", "modelling": true, "mobility": false,
  "energy": {"battery": "none", "rf_states": false, "harvester": false}
})";
}  // namespace

TEST_CASE("bundled NS2 descriptor") {
  const auto d = bundled("ns2");
  CHECK(d.nature == Nature::Simulator);
  CHECK(d.energy.battery == BatteryModel::Ideal);
  CHECK(criterion_cell(d, "Energy model").find("Only for Ideal Battery") != std::string::npos);
}

TEST_CASE("bundled TOSSIM descriptor") {
  const auto d = bundled("tossim");
  CHECK(d.nature == Nature::Emulator);
  CHECK(d.energy.battery == BatteryModel::None);
  CHECK(d.energy.rf_states);
  CHECK_FALSE(d.energy.harvester);
  CHECK(criterion_cell(d, "Energy model").rfind("Battery model: No RF states: Yes", 0) == 0);
}

TEST_CASE("closed enums reject unknown values with the field path") {
  std::string text = kMinimal;
  text.replace(text.find("single-level"), 12, "quantum");
  CHECK_THROWS_WITH_AS(parse_descriptor(text), doctest::Contains("/design_philosophy"), DescriptorError);
  std::string battery = kMinimal;
  battery.replace(battery.find("\"none\""), 6, "\"solar\"");
  CHECK_THROWS_WITH_AS(parse_descriptor(battery), doctest::Contains("/energy/battery"), DescriptorError);
}

TEST_CASE("schema violations") {
  CHECK_NOTHROW(parse_descriptor(kMinimal));
  std::string extra = kMinimal;
  extra.insert(1, "\"colour\": \"blue\",");
  CHECK_THROWS_WITH_AS(parse_descriptor(extra), doctest::Contains("/colour"), DescriptorError);
  std::string wrong_type = kMinimal;
  wrong_type.replace(wrong_type.find("\"heterogeneity\": false"), 22, "\"heterogeneity\": \"no\"");
  CHECK_THROWS_WITH_AS(parse_descriptor(wrong_type), doctest::Contains("/heterogeneity"), DescriptorError);
  std::string lang = kMinimal;
  lang.replace(lang.find("[\"C++\"]"), 7, "[\"C++\", 3]");
  CHECK_THROWS_WITH_AS(parse_descriptor(lang), doctest::Contains("/ui/languages/1"), DescriptorError);
  CHECK_THROWS_AS(parse_descriptor("{ not json"), DescriptorError);
  CHECK_THROWS_AS(load_descriptor("/nonexistent.json"), DescriptorError);
}

TEST_CASE("harvester flag must agree with the limitations") {
  std::string text = kMinimal;
  text.replace(text.find("\"harvester\": false}"), 19,
               "\"harvester\": true, \"limitations\": \"Cannot model energy harvester units\"}");
  CHECK_THROWS_WITH_AS(parse_descriptor(text), doctest::Contains("/energy/harvester"), DescriptorError);
}

TEST_CASE("load, emit, load round trip") {
  for (const char* n : {"ns2", "tossim", "omnetpp"}) {
    CAPTURE(n);
    const auto d = bundled(n);
    const auto again = parse_descriptor(to_json(d));
    CHECK(again == d);
    CHECK(to_json(again) == to_json(d));
  }
}

TEST_CASE("comparison table rows follow the criteria order") {
  const auto t1 = comparison_table({bundled("tossim"), bundled("ns2"), bundled("omnetpp")});
  const auto t2 = comparison_table({bundled("omnetpp"), bundled("tossim"), bundled("ns2")});
  CHECK(t1.criteria == criteria());
  CHECK(t2.criteria == criteria());
  CHECK(t1.criteria.size() == 12);
  CHECK(t1.criteria[6] == "Design philosophy");
  CHECK(t1.cell("Energy model", "NS2") == t2.cell("Energy model", "NS2"));
}

TEST_CASE("identical descriptors give identical columns") {
  const auto d = bundled("ns2");
  const auto t = comparison_table({d, d});
  for (const auto& row : t.cells) CHECK(row[0] == row[1]);
}

TEST_CASE("comparison needs two descriptors") {
  CHECK_THROWS(comparison_table({bundled("ns2")}));
  CHECK_THROWS(comparison_table({}));
}

TEST_CASE("markdown rendering escapes pipes") {
  auto a = parse_descriptor(kMinimal);
  auto b = a;
  b.name = "Mini|2";
  const auto md = comparison_table({a, b}).to_markdown();
  CHECK(md.find("Mini\\|2") != std::string::npos);
  CHECK(md.rfind("| Criterion | Mini |", 0) == 0);
}
