#include "tetra/cloning/challenge.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "tetra/spacetime/world.hpp"

namespace tetra::cloning {

PreparationRecord peter_prepare(const Measurement& p, Rng& rng) {
  if (p.num_particles != 1) {
    throw std::invalid_argument(
        "preparation measurements act on a single particle");
  }
  const SystemState drawn{static_cast<int>(rng.below(4))};
  const MeasureResult result = measure(p, drawn, rng);
  return PreparationRecord{p, result.outcome, result.post_state.value(0),
                           posterior_mixture(p, result.outcome)};
}

namespace {

struct TrialReturn {
  int first = 0;
  int second = 0;
  std::vector<int> path;
};

TrialReturn execute_strategy(const Strategy& strategy, spacetime::World& world,
                             const std::vector<spacetime::ParticleId>& ids,
                             Rng& rng) {
  TrialReturn out;
  const StrategyNode* node = strategy.root.get();
  for (;;) {
    if (const auto* leaf = std::get_if<LeafReturn>(&node->body)) {
      out.first = leaf->first;
      out.second = leaf->second;
      return out;
    }
    if (const auto* apply = std::get_if<ApplyStep>(&node->body)) {
      world.apply_map(ids[apply->target], apply->map, "alice");
      node = apply->next.get();
      continue;
    }
    const auto& step = std::get<MeasureStep>(node->body);
    std::vector<spacetime::ParticleId> targets;
    targets.reserve(step.targets.size());
    for (int t : step.targets) targets.push_back(ids[t]);
    const int outcome = world.measure(step.measurement, targets, rng, "alice");
    out.path.push_back(outcome);
    node = step.children[outcome].get();
  }
}

}  // namespace

ChallengeResult run_challenge(const Strategy& strategy,
                              const std::vector<Measurement>& preparations,
                              long long trials, const Rng& rng,
                              const ChallengeOptions& options) {
  if (trials < 1) {
    throw std::invalid_argument("trial count must be at least 1");
  }
  if (preparations.empty()) {
    throw std::invalid_argument("need at least one preparation measurement");
  }
  for (const Measurement& p : preparations) {
    if (p.num_particles != 1) {
      throw std::invalid_argument(
          "preparation measurements act on a single particle");
    }
    const ValidityReport report = validate_measurement(p);
    if (!report.ok) {
      throw std::invalid_argument("invalid preparation measurement: " +
                                  report.message);
    }
  }
  validate_strategy(strategy, options.num_particles);

  std::map<std::vector<int>, BranchStats> branches;
  ChallengeResult result;
  result.trials = trials;

  for (long long i = 0; i < trials; ++i) {
    Rng trial_rng = rng.derive(static_cast<std::uint64_t>(i));
    const Measurement& prep =
        preparations[trial_rng.below(
            static_cast<std::uint32_t>(preparations.size()))];
    const PreparationRecord record = peter_prepare(prep, trial_rng);

    spacetime::World world;
    std::vector<spacetime::ParticleId> ids;
    ids.push_back(world.spawn(record.ontic_value, 0, "peter"));
    for (int a = 1; a < options.num_particles; ++a) {
      ids.push_back(
          world.spawn(static_cast<int>(trial_rng.below(4)), 0, "alice"));
    }

    const TrialReturn handed =
        execute_strategy(strategy, world, ids, trial_rng);

    BranchStats& branch = branches[handed.path];
    branch.path = handed.path;
    branch.reached += 1;
    const int v1 = world.god_value(ids[handed.first]);
    const int v2 = world.god_value(ids[handed.second]);
    branch.pair_counts[v1][v2] += 1;

    bool pass = world.measure(prep, {ids[handed.first]}, trial_rng,
                              "peter") == record.outcome;
    if (!options.single_return) {
      pass = world.measure(prep, {ids[handed.second]}, trial_rng, "peter") ==
                 record.outcome &&
             pass;
    }
    if (pass) {
      result.passes += 1;
      branch.passed += 1;
    }
    if (options.log_sink) {
      options.log_sink(world.log());
    }
  }

  result.pass_rate = Rational(result.passes, result.trials);
  result.branches.reserve(branches.size());
  for (auto& [path, stats] : branches) {
    result.branches.push_back(std::move(stats));
  }
  return result;
}

Json challenge_to_json(const ChallengeResult& result) {
  Json j;
  j["trials"] = result.trials;
  j["passes"] = result.passes;
  j["pass_rate"] = result.pass_rate.to_string();
  j["pass_rate_float"] = result.pass_rate.to_double();
  Json branches = Json::array();
  for (const BranchStats& branch : result.branches) {
    branches.push_back(Json{{"path", branch.path},
                            {"reached", branch.reached},
                            {"passed", branch.passed},
                            {"pair_counts", branch.pair_counts}});
  }
  j["branches"] = branches;
  return j;
}

}  // namespace tetra::cloning
