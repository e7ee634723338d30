// Values frozen from tests/oracles/energy_oracle.py (closed-form sum of
// power times frame airtime). Regenerate with that script if a profile
// constant changes on purpose.

#include <cmath>

#include "doctest.h"
#include "wsn/harness/runner.hpp"
#include "wsn/mac/exchange.hpp"
#include "wsn/mac/phy_profile.hpp"

using namespace wsn;

namespace {

struct Frozen {
  const char* protocol;
  std::uint32_t payload;
  double freq;
  double sender_active_j;  // per interval
  double node_interval_j;
};

const Frozen kFrozen[] = {
    {"dot11b/ns2", 10, 0.1, 0.00042332358000000004, 0.0028243364671999998},
    {"dot11b/ns2", 10, 1.0, 0.00042332358000000004, 0.0010243364672000001},
    {"dot11b/ns2", 10, 2.0, 0.00042332358000000004, 0.00092433646720000014},
    {"dot11b/ns2", 20, 0.1, 0.00042877758000000005, 0.0028313873984000004},
    {"dot11b/ns2", 20, 1.0, 0.00042877758000000005, 0.0010313873984000002},
    {"dot11b/ns2", 20, 2.0, 0.00042877758000000005, 0.00093138739840000016},
    {"dot11b/ns2", 30, 0.1, 0.00043423233000000004, 0.0028384392992000006},
    {"dot11b/ns2", 30, 1.0, 0.00043423233000000004, 0.0010384392992},
    {"dot11b/ns2", 30, 2.0, 0.00043423233000000004, 0.00093843929920000007},
    {"dot11b/ns2", 40, 0.1, 0.00043968708000000003, 0.0028454912000000004},
    {"dot11b/ns2", 40, 1.0, 0.00043968708000000003, 0.0010454912},
    {"dot11b/ns2", 40, 2.0, 0.00043968708000000003, 0.00094549119999999998},
    {"dot11b/ns2", 50, 0.1, 0.00044514183000000007, 0.0028525431008000002},
    {"dot11b/ns2", 50, 1.0, 0.00044514183000000007, 0.0010525431008000003},
    {"dot11b/ns2", 50, 2.0, 0.00044514183000000007, 0.00095254310080000011},
    {"dot11b/ns2", 60, 0.1, 0.00045059583000000002, 0.0028595940320000003},
    {"dot11b/ns2", 60, 1.0, 0.00045059583000000002, 0.0010595940320000002},
    {"dot11b/ns2", 60, 2.0, 0.00045059583000000002, 0.00095959403200000012},
    {"dot11b/ns2", 70, 0.1, 0.00045605058000000007, 0.0028666459328000001},
    {"dot11b/ns2", 70, 1.0, 0.00045605058000000007, 0.0010666459328000002},
    {"dot11b/ns2", 70, 2.0, 0.00045605058000000007, 0.00096664593280000003},
    {"dot11b/ns2", 80, 0.1, 0.00046150533000000006, 0.0028736978336000004},
    {"dot11b/ns2", 80, 1.0, 0.00046150533000000006, 0.0010736978336},
    {"dot11b/ns2", 80, 2.0, 0.00046150533000000006, 0.00097369783360000005},
    {"dot11b/ns2", 90, 0.1, 0.00046696008000000005, 0.0028807497344000002},
    {"dot11b/ns2", 90, 1.0, 0.00046696008000000005, 0.0010807497344},
    {"dot11b/ns2", 90, 2.0, 0.00046696008000000005, 0.00098074973439999996},
    {"dot11b/omnet", 10, 0.1, 0.00042877758000000005, 0.0028313873984000004},
    {"dot11b/omnet", 10, 1.0, 0.00042877758000000005, 0.0010313873984000002},
    {"dot11b/omnet", 10, 2.0, 0.00042877758000000005, 0.00093138739840000016},
    {"dot11b/omnet", 20, 0.1, 0.00043423233000000004, 0.0028384392992000006},
    {"dot11b/omnet", 20, 1.0, 0.00043423233000000004, 0.0010384392992},
    {"dot11b/omnet", 20, 2.0, 0.00043423233000000004, 0.00093843929920000007},
    {"dot11b/omnet", 30, 0.1, 0.00043968708000000003, 0.0028454912000000004},
    {"dot11b/omnet", 30, 1.0, 0.00043968708000000003, 0.0010454912},
    {"dot11b/omnet", 30, 2.0, 0.00043968708000000003, 0.00094549119999999998},
    {"dot11b/omnet", 40, 0.1, 0.00044514183000000007, 0.0028525431008000002},
    {"dot11b/omnet", 40, 1.0, 0.00044514183000000007, 0.0010525431008000003},
    {"dot11b/omnet", 40, 2.0, 0.00044514183000000007, 0.00095254310080000011},
    {"dot11b/omnet", 50, 0.1, 0.00045059583000000002, 0.0028595940320000003},
    {"dot11b/omnet", 50, 1.0, 0.00045059583000000002, 0.0010595940320000002},
    {"dot11b/omnet", 50, 2.0, 0.00045059583000000002, 0.00095959403200000012},
    {"dot11b/omnet", 60, 0.1, 0.00045605058000000007, 0.0028666459328000001},
    {"dot11b/omnet", 60, 1.0, 0.00045605058000000007, 0.0010666459328000002},
    {"dot11b/omnet", 60, 2.0, 0.00045605058000000007, 0.00096664593280000003},
    {"dot11b/omnet", 70, 0.1, 0.00046150533000000006, 0.0028736978336000004},
    {"dot11b/omnet", 70, 1.0, 0.00046150533000000006, 0.0010736978336},
    {"dot11b/omnet", 70, 2.0, 0.00046150533000000006, 0.00097369783360000005},
    {"dot11b/omnet", 80, 0.1, 0.00046696008000000005, 0.0028807497344000002},
    {"dot11b/omnet", 80, 1.0, 0.00046696008000000005, 0.0010807497344},
    {"dot11b/omnet", 80, 2.0, 0.00046696008000000005, 0.00098074973439999996},
    {"dot11b/omnet", 90, 0.1, 0.00047241408000000005, 0.0028878006656000003},
    {"dot11b/omnet", 90, 1.0, 0.00047241408000000005, 0.0010878006656000001},
    {"dot11b/omnet", 90, 2.0, 0.00047241408000000005, 0.00098780066560000008},
    {"dot154/default", 10, 0.1, 9.2896e-05, 0.00078140416000000009},
    {"dot154/default", 10, 1.0, 9.2896e-05, 0.00024140416000000001},
    {"dot154/default", 10, 2.0, 9.2896e-05, 0.00021140416000000001},
    {"dot154/default", 20, 0.1, 0.000109536, 0.00081688576000000005},
    {"dot154/default", 20, 1.0, 0.000109536, 0.00027688576000000004},
    {"dot154/default", 20, 2.0, 0.000109536, 0.00024688576000000002},
    {"dot154/default", 30, 0.1, 0.00012617600000000001, 0.00085236736},
    {"dot154/default", 30, 1.0, 0.00012617600000000001, 0.00031236736},
    {"dot154/default", 30, 2.0, 0.00012617600000000001, 0.00028236736000000003},
    {"dot154/default", 40, 0.1, 0.00014281600000000001, 0.00088784896000000007},
    {"dot154/default", 40, 1.0, 0.00014281600000000001, 0.00034784896000000006},
    {"dot154/default", 40, 2.0, 0.00014281600000000001, 0.00031784896000000004},
    {"dot154/default", 50, 0.1, 0.00015945600000000001, 0.00092333056000000013},
    {"dot154/default", 50, 1.0, 0.00015945600000000001, 0.00038333056000000002},
    {"dot154/default", 50, 2.0, 0.00015945600000000001, 0.00035333056000000005},
    {"dot154/default", 60, 0.1, 0.00017609600000000002, 0.00095881216000000009},
    {"dot154/default", 60, 1.0, 0.00017609600000000002, 0.00041881216000000008},
    {"dot154/default", 60, 2.0, 0.00017609600000000002, 0.00038881216},
    {"dot154/default", 70, 0.1, 0.00019273600000000002, 0.00099429376000000004},
    {"dot154/default", 70, 1.0, 0.00019273600000000002, 0.00045429376000000004},
    {"dot154/default", 70, 2.0, 0.00019273600000000002, 0.00042429376000000001},
    {"dot154/default", 80, 0.1, 0.00020937600000000002, 0.00102977536},
    {"dot154/default", 80, 1.0, 0.00020937600000000002, 0.00048977535999999999},
    {"dot154/default", 80, 2.0, 0.00020937600000000002, 0.00045977536000000002},
    {"dot154/default", 90, 0.1, 0.00022601600000000003, 0.00106525696},
    {"dot154/default", 90, 1.0, 0.00022601600000000003, 0.00052525695999999995},
    {"dot154/default", 90, 2.0, 0.00022601600000000003, 0.00049525696000000008},
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("frozen airtimes") {
  const auto p = mac::profile_by_name("dot11b/ns2");
  CHECK(mac::compute_airtime_us(p, 20) == doctest::Approx(206.54545454545453).epsilon(1e-15));
  CHECK(mac::compute_airtime_us(p, 14) == doctest::Approx(202.1818181818182).epsilon(1e-15));
  CHECK(mac::compute_airtime_us(p, 65) == doctest::Approx(239.27272727272728).epsilon(1e-15));
  CHECK(mac::build_rts_cts_exchange(p, 10, sim::SimTime{0}).total.count() == 930182);
  CHECK(mac::build_cca_exchange(mac::profile_by_name("dot154/default"), 10, 0).total.count() == 2080000);
}

TEST_CASE("simulated sweep matches the closed-form oracle") {
  harness::SweepGrid grid;
  grid.protocols = {"dot11b/ns2", "dot11b/omnet", "dot154/default"};
  harness::SweepOptions opts;
  opts.jobs = 2;
  const auto result = harness::sweep_energy(grid, 1, opts);
  REQUIRE(result.table.size() == std::size(kFrozen));
  for (std::size_t i = 0; i < result.table.size(); ++i) {
    const auto& row = result.table[i];
    const auto& f = kFrozen[i];
    CAPTURE(row.run_id);
    REQUIRE(row.protocol == f.protocol);
    REQUIRE(row.payload_bytes == f.payload);
    REQUIRE(row.freq_hz == f.freq);
    CHECK(rel(row.node0_sender_active_j, f.sender_active_j) < 1e-12);
    CHECK(rel(row.node0_interval_j, f.node_interval_j) < 1e-12);
    CHECK(rel(row.node1_interval_j, f.node_interval_j) < 1e-12);
  }
}
