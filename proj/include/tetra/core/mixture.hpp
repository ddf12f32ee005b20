#pragma once

#include <array>
#include <utility>
#include <vector>

#include "tetra/core/measurement.hpp"
#include "tetra/core/state.hpp"
#include "tetra/rational.hpp"

namespace tetra {

// An epistemic state: a finite probability distribution over ontic states.
// These are the only states an agent can actually prepare or know.
// Probabilities are exact rationals, positive, and sum to exactly 1;
// support entries are distinct and kept sorted.
class Mixture {
 public:
  explicit Mixture(std::vector<std::pair<SystemState, Rational>> support);

  static Mixture uniform_over(const std::vector<SystemState>& states);
  static Mixture point(const SystemState& state);

  const std::vector<std::pair<SystemState, Rational>>& support() const {
    return support_;
  }
  std::size_t particle_count() const {
    return support_.front().first.particle_count();
  }

  // Probability of the given state (0 if outside the support).
  Rational probability_of(const SystemState& state) const;

  // Per-value probabilities for one particle.
  std::array<Rational, kParticleValues> marginal(std::size_t particle) const;

  bool operator==(const Mixture& other) const {
    return support_ == other.support_;
  }

 private:
  std::vector<std::pair<SystemState, Rational>> support_;
};

// The epistemic state of anyone who knows a measurement gave outcome r:
// uniform over the rows of the r-th outcome set.
Mixture posterior_mixture(const Measurement& m, int outcome);

// Bayesian retrodiction: the prior conditioned on membership in the r-th
// outcome set. This is the distribution of the PRE-measurement state given
// the outcome; the post-measurement state is posterior_mixture instead.
// Throws std::domain_error if the prior is disjoint from the outcome set
// ("outcome impossible under prior").
Mixture retrodict(const Mixture& prior, const Measurement& m, int outcome);

}  // namespace tetra
