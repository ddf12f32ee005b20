#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tetra/cloning/strategy.hpp"
#include "tetra/core/measurement.hpp"
#include "tetra/rational.hpp"

namespace tetra::cloning {

struct CatalogApply {
  int target = 0;
  Bijection map = Bijection::identity();
};

struct CatalogMeasure {
  std::vector<int> targets;
  Measurement measurement;
};

// One move the adversary may make at a tree node.
struct CatalogAction {
  std::string label;
  std::variant<CatalogApply, CatalogMeasure> body;
};

// All four rotations on each particle, all four single-particle partitions
// on each particle, and the pair measurement on each unordered pair of
// particles (its two orientations induce the same partition, so one
// suffices).
std::vector<CatalogAction> default_catalog(int num_particles);

struct SearchOptions {
  long long node_budget = 1'000'000;
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(long long budget)
      : std::runtime_error("search node budget exceeded: " +
                           std::to_string(budget)) {}
};

struct SearchResult {
  Strategy best;
  Rational max_pass_probability;
  long long nodes_explored = 0;
};

// Exhaustive sweep of all decision trees over the catalog up to `depth`
// action nodes per path. No sampling: the challenge's finite probability
// space (preparation choice, hidden value, ancilla values, measurement
// branching) is propagated exactly, so the returned maximum is an exact
// rational. Equal-value ties resolve to the earliest candidate in
// catalog/leaf order, keeping the result deterministic.
// Caps: 2 <= num_particles <= 3, 0 <= depth <= 2. Throws BudgetExceeded
// when more than options.node_budget tree nodes get evaluated.
SearchResult search_strategies(int num_particles, int depth,
                               const std::vector<CatalogAction>& catalog,
                               const std::vector<Measurement>& preparations,
                               const SearchOptions& options = {});

// Exact pass probability of one fixed strategy under the same challenge
// model (uniform preparation choice, uniform ancillas).
Rational exact_pass_probability(const Strategy& strategy, int num_particles,
                                const std::vector<Measurement>& preparations);

}  // namespace tetra::cloning
