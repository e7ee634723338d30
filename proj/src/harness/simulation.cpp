#include "wsn/harness/simulation.hpp"

#include <algorithm>

namespace wsn::harness {

namespace {

energy::RadioState to_radio_state(mac::Activity a) {
  switch (a) {
    case mac::Activity::Transmit: return energy::RadioState::Tx;
    case mac::Activity::Receive: return energy::RadioState::Rx;
    case mac::Activity::Idle: break;
  }
  return energy::RadioState::Idle;
}

}  // namespace

Simulation::Simulation(scenario::Topology topology, scenario::TrafficPlan traffic, mac::PhyProfile profile,
                       energy::ModelKind model, const energy::ModelParams& params,
                       medium::PathLossParams path_loss, double sensitivity_w, std::uint64_t seed,
                       SimTime duration, bool keep_entries)
    : topology_(std::move(topology)),
      traffic_(std::move(traffic)),
      profile_(std::move(profile)),
      model_(model),
      path_loss_(path_loss),
      sensitivity_w_(sensitivity_w),
      tx_power_w_(params.power.tx_w),
      shadowing_(seed, path_loss.sigma_db),
      duration_(duration) {
  topology_.validate();
  profile_.validate();
  path_loss_.validate();
  const SimTime bucket = traffic_.round_period > SimTime{0} ? traffic_.round_period : duration_;
  const SimTime width = bucket > SimTime{0} ? bucket : SimTime{1};

  const std::size_t n = topology_.size();
  rng_.reserve(n);
  energy_.reserve(n);
  for (NodeId id = 0; id < n; ++id) {
    rng_.emplace_back(sim::derive_seed(seed, id));
    energy_.push_back(energy::attach_model(id, model, params, width, keep_entries));
  }
  node_busy_until_.assign(n, SimTime{0});
  flow_sent_.assign(traffic_.flows.size(), 0);

  for (std::uint32_t f = 0; f < traffic_.flows.size(); ++f) {
    const auto& flow = traffic_.flows[f];
    if (flow.source >= n || flow.destination >= n) throw scenario::ScenarioError("flow references unknown node");
    if (flow.count > 0) {
      engine_.schedule(flow.first, sim::EventKind::AppSend, flow.source,
                       sim::MessagePayload{flow.destination, flow.payload_bytes, false, f});
    }
  }
  engine_.set_handler([this](sim::Engine& e, const sim::Event& ev) { handle(e, ev); });
}

Simulation Simulation::from_config(const scenario::ScenarioConfig& cfg, bool keep_entries) {
  const double sensitivity_w = medium::dbm_to_watts(cfg.sensitivity_dbm);
  if (cfg.kind == scenario::ScenarioKind::Ping) {
    auto plan = scenario::build_ping_pair(cfg.ping);
    return Simulation(std::move(plan.topology), std::move(plan.traffic), mac::profile_by_name(cfg.ping.profile),
                      cfg.model, cfg.energy, cfg.path_loss, sensitivity_w, cfg.ping.seed,
                      sim::from_seconds(cfg.ping.duration_s), keep_entries);
  }
  cfg.mesh.validate();
  auto topology = scenario::build_mesh(cfg.mesh.bc_count);
  auto traffic = scenario::mesh_traffic_plan(topology, cfg.mesh.rounds, cfg.mesh.frequency_hz, cfg.mesh.profile,
                                             cfg.mesh.payload_bytes);
  const SimTime duration = traffic.round_period * static_cast<std::int64_t>(cfg.mesh.rounds);
  return Simulation(std::move(topology), std::move(traffic), mac::profile_by_name(cfg.mesh.profile), cfg.model,
                    cfg.energy, cfg.path_loss, sensitivity_w, cfg.mesh.seed, duration, keep_entries);
}

std::uint64_t Simulation::run() {
  if (ran_) throw std::logic_error("simulation already ran");
  ran_ = true;
  const std::uint64_t count = engine_.run_until(duration_);
  end_time_ = std::max(duration_, medium_busy_until_);
  for (auto& e : energy_) e->close(end_time_);
  return count;
}

bool Simulation::reachable(NodeId from, NodeId to) const {
  const double d = topology_.distance(from, to);
  if (d <= 0) return true;
  return medium::in_range(tx_power_w_, path_loss_, d, sensitivity_w_, shadowing_.draw(from, to));
}

const Simulation::CachedExchange& Simulation::exchange_for(std::uint32_t payload, std::uint32_t attempt,
                                                           std::uint64_t slots) {
  const std::uint64_t key = (std::uint64_t{payload} << 40) | (std::uint64_t{attempt} << 32) | slots;
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  mac::ExchangeTimeline t =
      profile_.standard == mac::Standard::Dot11b
          ? mac::build_rts_cts_exchange(profile_, payload,
                                        mac::phase_duration(static_cast<double>(slots) * profile_.slot_us))
          : mac::build_cca_exchange(profile_, payload, static_cast<std::uint32_t>(slots));
  CachedExchange c;
  c.total = t.total;
  c.sender = t.activity_for(mac::Direction::Sender);
  c.receiver = t.activity_for(mac::Direction::Receiver);
  SimTime offset{0};
  for (const auto& p : t.phases) {
    offset += p.duration;
    if (p.kind == mac::PhaseKind::Tx) c.frames.push_back({offset, p.direction == mac::Direction::Sender});
  }
  return cache_.emplace(key, std::move(c)).first->second;
}

void Simulation::drive(NodeId node, const std::vector<mac::ActivitySpan>& spans, SimTime start, SimTime total,
                       energy::Role role) {
  auto& e = *energy_[node];
  for (const auto& span : spans) e.enter(to_radio_state(span.activity), start + span.offset, role);
  e.enter(energy::RadioState::Idle, start + total, energy::Role::None);
}

void Simulation::handle(sim::Engine& engine, const sim::Event& ev) {
  if (ev.kind != sim::EventKind::AppSend) return;
  const auto& msg = std::get<sim::MessagePayload>(ev.payload);
  const NodeId src = ev.node;
  const NodeId dst = msg.destination;

  if (!msg.is_reply) {
    const auto& flow = traffic_.flows[msg.flow];
    const std::uint64_t sent = ++flow_sent_[msg.flow];
    if (sent < flow.count) {
      engine.schedule(flow.first + flow.period * static_cast<std::int64_t>(sent), sim::EventKind::AppSend, src,
                      msg);
    }
    ++stats_.requests_sent;
  } else {
    ++stats_.replies_sent;
  }

  if (energy_[src]->depleted() || energy_[dst]->depleted()) {
    ++stats_.dropped_energy;
    return;
  }
  if (!reachable(src, dst)) {
    ++stats_.dropped_range;
    return;
  }

  const SimTime now = engine.now();
  const SimTime start = std::max({now, medium_busy_until_, node_busy_until_[src], node_busy_until_[dst]});
  const std::uint32_t attempt = start > now ? 1 : 0;
  if (attempt > 0) ++stats_.deferred;
  if (attempt >= mac::max_attempts(profile_)) {
    ++stats_.dropped_retries;
    return;
  }

  const std::uint64_t slots = mac::draw_backoff_slots(profile_, rng_[src], attempt);
  const CachedExchange& x = exchange_for(msg.payload_bytes, attempt, slots);

  drive(src, x.sender, start, x.total, energy::Role::Initiator);
  drive(dst, x.receiver, start, x.total, energy::Role::Responder);
  // Per-frame charges for the accounting model; no-ops for time-based models.
  for (const auto& f : x.frames) {
    energy_[src]->frame(f.by_sender, start + f.end, energy::Role::Initiator);
    energy_[dst]->frame(!f.by_sender, start + f.end, energy::Role::Responder);
  }
  ++stats_.exchanges;

  const SimTime end = start + x.total;
  medium_busy_until_ = end;
  node_busy_until_[src] = end;
  node_busy_until_[dst] = end;

  if (!msg.is_reply && traffic_.echo_replies) {
    engine.schedule(end, sim::EventKind::AppSend, dst, sim::MessagePayload{src, msg.payload_bytes, true, msg.flow});
  }
}

}  // namespace wsn::harness
