#pragma once

#include <array>
#include <functional>
#include <vector>

#include "tetra/cloning/strategy.hpp"
#include "tetra/core/measurement.hpp"
#include "tetra/core/mixture.hpp"
#include "tetra/json.hpp"
#include "tetra/rational.hpp"
#include "tetra/rng.hpp"
#include "tetra/spacetime/log.hpp"

namespace tetra::cloning {

// What the verifier knows after preparing a particle: the measurement he
// used, the outcome he saw, and the posterior that outcome buys him. The
// particle itself carries only ontic_value; nothing about the preparation
// travels with it.
struct PreparationRecord {
  Measurement measurement;
  int outcome = 0;
  int ontic_value = 0;  // god view
  Mixture epistemic;    // posterior_mixture(measurement, outcome)
};

// Draws a uniform hidden value and measures `p` (a valid single-particle
// measurement) on it.
PreparationRecord peter_prepare(const Measurement& p, Rng& rng);

struct ChallengeOptions {
  int num_particles = 2;  // particles the adversary holds, prepared one included

  // Control mode: only the leaf's first particle is handed back and
  // re-tested. With the do-nothing strategy this reduces to repeatability,
  // so the pass rate is exactly 1.
  bool single_return = false;

  // When set, receives each trial's event log (for locality audits).
  std::function<void(const spacetime::WorldLog&)> log_sink;
};

// Trials grouped by the path of outcomes observed while the strategy ran.
struct BranchStats {
  std::vector<int> path;
  long long reached = 0;
  long long passed = 0;
  // God view of the two returned particles' values at hand-back time,
  // before the verifier re-measures.
  std::array<std::array<long long, 4>, 4> pair_counts{};
};

struct ChallengeResult {
  long long trials = 0;
  long long passes = 0;
  Rational pass_rate;               // passes / trials, exact
  std::vector<BranchStats> branches;  // sorted by path
};

// The cloning game: per trial, the verifier picks one of `preparations`
// uniformly and prepares a particle; the adversary holds it plus
// num_particles-1 ancillas in uniformly random hidden states and runs the
// strategy (all joint measurements locality-checked); the verifier then
// re-measures both returned particles with his original measurement. The
// trial passes iff both outcomes repeat his preparation outcome.
ChallengeResult run_challenge(const Strategy& strategy,
                              const std::vector<Measurement>& preparations,
                              long long trials, const Rng& rng,
                              const ChallengeOptions& options = {});

Json challenge_to_json(const ChallengeResult& result);

}  // namespace tetra::cloning
