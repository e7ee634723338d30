#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include "doctest.h"
#include "wsn/mac/exchange.hpp"
#include "wsn/mac/phy_profile.hpp"
#include "wsn/scenario/config.hpp"
#include "wsn/scenario/topology.hpp"

using namespace wsn::scenario;
using namespace std::chrono_literals;

TEST_CASE("one basic component is a 10 m square") {
  const auto t = build_mesh(1);
  REQUIRE(t.size() == 4);
  const double xy[4][2] = {{0, 0}, {10, 0}, {0, 10}, {10, 10}};
  for (int i = 0; i < 4; ++i) {
    CHECK(t.nodes[i].x == xy[i][0]);
    CHECK(t.nodes[i].y == xy[i][1]);
  }
  CHECK(t.distance(0, 3) == doctest::Approx(std::sqrt(200.0)));
}

TEST_CASE("mesh sizes") {
  CHECK(build_mesh(2).size() == 8);
  CHECK(build_mesh(128).size() == 512);
  CHECK_THROWS_AS(build_mesh(0), ScenarioError);
  // squares do not overlap
  const auto t = build_mesh(4);
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = a + 1; b < t.size(); ++b) CHECK(t.distance(a, b) > 0.0);
  }
}

TEST_CASE("ping plan counts") {
  PingScenario s;
  auto plan = build_ping_pair(s);
  CHECK(plan.topology.size() == 2);
  CHECK(plan.topology.nodes[1].x == 10.0);
  CHECK(plan.traffic.request_count() == 100);
  CHECK(plan.traffic.message_count() == 200);
  CHECK(plan.traffic.round_period == wsn::sim::SimTime{1s});

  s.payload_bytes = 90;
  s.frequency_hz = 2.0;
  CHECK(build_ping_pair(s).traffic.request_count() == 200);

  s.duration_s = 0.0;
  CHECK(build_ping_pair(s).traffic.request_count() == 0);
}

TEST_CASE("ping preconditions") {
  PingScenario s;
  s.payload_bytes = 15;
  CHECK_THROWS_AS(s.validate(), ScenarioError);
  s.payload_bytes = 10;
  s.frequency_hz = 0.0;
  CHECK_THROWS_AS(s.validate(), ScenarioError);
  // the worst-case round trip must fit in the period
  s.frequency_hz = 2000.0;
  s.profile = "dot154/default";
  CHECK_THROWS_AS(s.validate(), ScenarioError);
}

TEST_CASE("mesh traffic plan") {
  const auto t4 = build_mesh(1);
  const auto plan = mesh_traffic_plan(t4, 1, 1.0, "dot11b/ns2", 10);
  CHECK(plan.request_count() == 12);
  CHECK(plan.message_count() == 24);
  const auto t8 = build_mesh(2);
  CHECK(mesh_traffic_plan(t8, 100, 1.0, "dot11b/ns2", 10).request_count() == 5600);

  // slots never overlap inside a round
  const auto p = mesh_traffic_plan(t8, 1, 1.0, "dot11b/ns2", 10);
  const auto guard = mesh_guard_gap("dot11b/ns2", 10);
  std::vector<wsn::sim::SimTime> starts;
  for (const auto& f : p.flows) starts.push_back(f.first);
  std::sort(starts.begin(), starts.end());
  for (std::size_t i = 1; i < starts.size(); ++i) CHECK(starts[i] - starts[i - 1] >= guard);
  CHECK(guard == 2 * wsn::mac::worst_case_exchange(wsn::mac::profile_by_name("dot11b/ns2"), 10));
}

TEST_CASE("round period stretches for large meshes") {
  const auto t = build_mesh(128);
  const auto plan = mesh_traffic_plan(t, 1, 1.0, "dot11b/ns2", 10);
  const auto guard = mesh_guard_gap("dot11b/ns2", 10);
  CHECK(plan.round_period == guard * (512 * 511));
  CHECK(mesh_traffic_plan(build_mesh(1), 1, 1.0, "dot11b/ns2", 10).round_period == wsn::sim::SimTime{1s});
}

TEST_CASE("default power tables follow the standard") {
  CHECK(default_power_table("dot11b/omnet").tx_w == 0.750);
  CHECK(default_power_table("dot154/default").tx_w == 0.052);
}

TEST_CASE("scenario parsing") {
  const auto cfg = parse_scenario(R"({
    "name": "p", "type": "ping", "profile": "dot11b/omnet", "payload_bytes": 30,
    "frequency_hz": 2, "duration_s": 10, "model": "hier",
    "energy": {"unit_mode": "charge-current", "voltage_v": 3.3}
  })");
  CHECK(cfg.kind == ScenarioKind::Ping);
  CHECK(cfg.profile() == "dot11b/omnet");
  CHECK(cfg.payload_bytes() == 30);
  CHECK(cfg.frequency_hz() == 2.0);
  CHECK(cfg.model == wsn::energy::ModelKind::Hierarchical);
  CHECK(cfg.energy.unit_mode == wsn::energy::UnitMode::ChargeCurrent);
  CHECK(cfg.energy.nominal_voltage_v == 3.3);
  CHECK(cfg.energy.power.tx_w == 0.750);
}

TEST_CASE("scenario round trip") {
  MeshScenario m;
  m.bc_count = 3;
  m.rounds = 5;
  const auto cfg = make_mesh_config(m, wsn::energy::ModelKind::StateMachine);
  const auto back = parse_scenario(to_json(cfg));
  CHECK(to_json(back) == to_json(cfg));
  CHECK(back.mesh.bc_count == 3);
  CHECK(back.mesh.rounds == 5);
}

TEST_CASE("scenario errors carry a location") {
  CHECK_THROWS_WITH_AS(parse_scenario("{\n  \"name\": \"x\",\n  oops\n}"), doctest::Contains("line 3"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_scenario(R"({"name": "x", "payload": 10})"), doctest::Contains("/payload"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_scenario(R"({"profile": "wifi6"})"), doctest::Contains("/profile"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_scenario(R"({"payload_bytes": -3})"), doctest::Contains("/payload_bytes"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_scenario(R"({"payload_bytes": 11})"), doctest::Contains("payload"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_scenario(R"({"energy": {"capacity_j": 1}})"), doctest::Contains("/energy/capacity_j"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_scenario(R"({"model": "sm", "energy": {"harvester": 0.1}})"),
                       doctest::Contains("harvester"), ConfigError);
  CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.json"), ConfigError);
}

TEST_CASE("bundled scenario files load") {
  for (const char* f : {"ping_dot11b_ns2.json", "ping_dot11b_omnet.json", "ping_dot154.json", "mesh_bc4.json"}) {
    CAPTURE(f);
    CHECK_NOTHROW(load_scenario(std::string(WSN_DATA_DIR) + "/scenarios/" + f));
  }
}
