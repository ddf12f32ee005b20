#include "tetra/bell/teleport.hpp"

#include <stdexcept>

#include "tetra/spacetime/serialize.hpp"
#include "tetra/spacetime/world.hpp"
#include "tetra/stats.hpp"

namespace tetra::bell {

namespace {

int row_index_within(const Measurement& m, int outcome,
                     const SystemState& state) {
  const auto& rows = m.outcome_sets[outcome].rows;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] == state) return static_cast<int>(i);
  }
  throw std::logic_error("post-measurement state missing from outcome set");
}

Json chi_square_json(const ChiSquareResult& r) {
  return Json{{"statistic", r.statistic},
              {"dof", r.dof},
              {"critical", r.critical},
              {"pass", r.pass}};
}

}  // namespace

TeleportationTranscript teleport_run(int input_value, Rng& rng,
                                     const TeleportOptions& options) {
  if (!is_particle_value(input_value)) {
    throw std::invalid_argument("input value must be in 0..3");
  }
  if (options.distance < 0) {
    throw std::invalid_argument("distance must be non-negative");
  }
  if (options.forced_pair_value &&
      !is_particle_value(*options.forced_pair_value)) {
    throw std::invalid_argument("forced pair value must be in 0..3");
  }

  const spacetime::Coord alice_pos = 0;
  const spacetime::Coord bob_pos = options.distance;
  const spacetime::Coord source_pos = options.distance / 2;

  spacetime::World world;
  TeleportationTranscript t;

  const spacetime::ParticleId p1 =
      world.spawn(input_value, alice_pos, "alice");

  BellPairRecord pair = prepare_pair(world, source_pos, rng);
  t.pair_outcome = pair.pair_outcome;
  pair = normalize_pair(world, pair);
  if (options.forced_pair_value) {
    world.god_set_value(pair.first, *options.forced_pair_value);
    world.god_set_value(pair.second, *options.forced_pair_value);
  }
  t.input_value = world.god_value(p1);
  t.pair_value = world.god_value(pair.first);

  world.transport({{pair.first, alice_pos}, {pair.second, bob_pos}});

  t.alice_outcome =
      world.measure(bell_measurement(), {p1, pair.first}, rng, "alice");
  t.alice_pair_post = {world.god_value(p1), world.god_value(pair.first)};

  const spacetime::World::SentMessage sent =
      world.send_message(t.alice_outcome, alice_pos, bob_pos, "alice");
  t.message.value = t.alice_outcome;
  t.message.sent = world.clock();

  t.bob_correction = world.receive_message(sent.id, "bob");
  t.message.received = world.clock();
  world.apply_map(pair.second, rotation(t.bob_correction), "bob");

  t.output_value = world.god_value(pair.second);
  t.success = t.output_value == t.input_value;
  t.log = world.log();
  return t;
}

TeleportStats teleport_stats(long long trials, const Rng& rng,
                             const TeleportOptions& options) {
  if (trials < 1) {
    throw std::invalid_argument("trial count must be at least 1");
  }
  TeleportStats stats;
  stats.trials = trials;
  const Measurement bell = bell_measurement();
  for (long long i = 0; i < trials; ++i) {
    Rng trial_rng = rng.derive(static_cast<std::uint64_t>(i));
    const int x = static_cast<int>(trial_rng.below(4));
    const TeleportationTranscript t = teleport_run(x, trial_rng, options);
    stats.successes += t.success ? 1 : 0;
    stats.input_counts[t.input_value] += 1;
    stats.alice_outcome_counts[t.alice_outcome] += 1;
    stats.particle1_post_counts[t.alice_pair_post[0]] += 1;
    const SystemState post{t.alice_pair_post[0], t.alice_pair_post[1]};
    stats.pair_row_counts[t.alice_outcome]
                         [row_index_within(bell, t.alice_outcome, post)] += 1;
  }
  return stats;
}

Json transcript_to_json(const TeleportationTranscript& t, bool god_view) {
  Json j;
  j["pair_outcome"] = t.pair_outcome;
  j["alice_outcome"] = t.alice_outcome;
  j["message"] = Json{{"value", t.message.value},
                      {"sent", t.message.sent},
                      {"received", t.message.received}};
  j["bob_correction"] = t.bob_correction;
  j["events"] = spacetime::log_to_json(t.log);
  if (god_view) {
    j["god"] = Json{{"input_value", t.input_value},
                    {"pair_value", t.pair_value},
                    {"alice_pair_post", t.alice_pair_post},
                    {"output_value", t.output_value},
                    {"success", t.success}};
  }
  return j;
}

Json stats_to_json(const TeleportStats& stats) {
  Json j;
  j["trials"] = stats.trials;
  j["successes"] = stats.successes;
  j["success_rate"] = static_cast<double>(stats.successes) /
                      static_cast<double>(stats.trials);
  j["input_counts"] = stats.input_counts;
  j["alice_outcome_counts"] = stats.alice_outcome_counts;
  j["alice_outcome_chi_square"] =
      chi_square_json(chi_square_uniform(stats.alice_outcome_counts));
  j["particle1_post_counts"] = stats.particle1_post_counts;
  j["particle1_post_chi_square"] =
      chi_square_json(chi_square_uniform(stats.particle1_post_counts));
  j["pair_row_counts"] = stats.pair_row_counts;
  Json pair_chi = Json::array();
  for (const auto& counts : stats.pair_row_counts) {
    pair_chi.push_back(chi_square_json(chi_square_uniform(counts)));
  }
  j["pair_row_chi_square"] = pair_chi;
  return j;
}

}  // namespace tetra::bell
