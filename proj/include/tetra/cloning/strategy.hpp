#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "tetra/core/bijection.hpp"
#include "tetra/core/measurement.hpp"
#include "tetra/json.hpp"

namespace tetra::cloning {

struct StrategyNode;
using StrategyNodePtr = std::shared_ptr<const StrategyNode>;

// Hand back particles `first` and `second` (0-based), in that order.
struct LeafReturn {
  int first = 0;
  int second = 1;
};

// Apply a bijection to one particle, then continue with `next`.
struct ApplyStep {
  int target = 0;
  Bijection map = Bijection::identity();
  StrategyNodePtr next;
};

// Jointly measure `targets` (0-based, distinct), then continue with the
// child matching the observed outcome.
struct MeasureStep {
  std::vector<int> targets;
  Measurement measurement;
  std::vector<StrategyNodePtr> children;  // one per outcome
};

struct StrategyNode {
  std::variant<LeafReturn, ApplyStep, MeasureStep> body;
};

// A decision tree over the particles the adversary holds: internal nodes
// act and branch on observed outcomes, leaves name the two particles
// handed back for re-testing.
struct Strategy {
  StrategyNodePtr root;
};

// Hand back particles 0 and 1 untouched.
Strategy null_strategy();

// Longest count of action nodes on any root-to-leaf path.
int strategy_depth(const Strategy& strategy);

// Structural and physical checks: particle indices in range, leaf indices
// distinct, measurement widths matching their target lists, one child per
// outcome, and every referenced measurement valid.
// Throws std::invalid_argument on the first violation.
void validate_strategy(const Strategy& strategy, int num_particles);

// Wire format (particle indices 1-based on the wire):
//   {"leaf": [i, j]}
// | {"node": {"action": {"type": "apply", "table": [..]}
//             | {"type": "measure", "measurement": {..}},
//             "target_particles": [..],
//             "children_by_outcome": [..]}}
// An apply node has exactly one target and one child.
Json strategy_to_json(const Strategy& strategy);
Strategy strategy_from_json(const Json& j);
Strategy load_strategy_file(const std::string& path);

}  // namespace tetra::cloning
