#include "tetra/cloning/strategy.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "tetra/core/serialize.hpp"

namespace tetra::cloning {

namespace {

void check_particle(int index, int num_particles, const char* what) {
  if (index < 0 || index >= num_particles) {
    throw std::invalid_argument(std::string(what) + " index " +
                                std::to_string(index + 1) +
                                " outside 1.." +
                                std::to_string(num_particles));
  }
}

void validate_node(const StrategyNodePtr& node, int num_particles) {
  if (!node) {
    throw std::invalid_argument("strategy tree contains a missing node");
  }
  if (const auto* leaf = std::get_if<LeafReturn>(&node->body)) {
    check_particle(leaf->first, num_particles, "returned particle");
    check_particle(leaf->second, num_particles, "returned particle");
    if (leaf->first == leaf->second) {
      throw std::invalid_argument(
          "a leaf must return two distinct particles");
    }
    return;
  }
  if (const auto* apply = std::get_if<ApplyStep>(&node->body)) {
    check_particle(apply->target, num_particles, "manipulation target");
    validate_node(apply->next, num_particles);
    return;
  }
  const auto& step = std::get<MeasureStep>(node->body);
  if (step.targets.size() != step.measurement.num_particles) {
    throw std::invalid_argument(
        "measurement width does not match its target list");
  }
  for (int target : step.targets) {
    check_particle(target, num_particles, "measurement target");
  }
  std::vector<int> sorted = step.targets;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("measurement targets must be distinct");
  }
  const ValidityReport report = validate_measurement(step.measurement);
  if (!report.ok) {
    throw std::invalid_argument("strategy uses an invalid measurement: " +
                                report.message);
  }
  if (step.children.size() != step.measurement.outcome_sets.size()) {
    throw std::invalid_argument(
        "a measure node needs one child per outcome");
  }
  for (const StrategyNodePtr& child : step.children) {
    validate_node(child, num_particles);
  }
}

int node_depth(const StrategyNodePtr& node) {
  if (!node) return 0;
  if (std::holds_alternative<LeafReturn>(node->body)) return 0;
  if (const auto* apply = std::get_if<ApplyStep>(&node->body)) {
    return 1 + node_depth(apply->next);
  }
  const auto& step = std::get<MeasureStep>(node->body);
  int deepest = 0;
  for (const StrategyNodePtr& child : step.children) {
    deepest = std::max(deepest, node_depth(child));
  }
  return 1 + deepest;
}

Json node_to_json(const StrategyNodePtr& node) {
  if (!node) {
    throw std::invalid_argument("strategy tree contains a missing node");
  }
  if (const auto* leaf = std::get_if<LeafReturn>(&node->body)) {
    return Json{{"leaf", {leaf->first + 1, leaf->second + 1}}};
  }
  Json inner;
  if (const auto* apply = std::get_if<ApplyStep>(&node->body)) {
    inner["action"] = Json{{"type", "apply"}, {"table", apply->map.table()}};
    inner["target_particles"] = Json::array({apply->target + 1});
    inner["children_by_outcome"] = Json::array({node_to_json(apply->next)});
  } else {
    const auto& step = std::get<MeasureStep>(node->body);
    inner["action"] = Json{{"type", "measure"},
                           {"measurement",
                            measurement_to_json(step.measurement)}};
    Json targets = Json::array();
    for (int target : step.targets) targets.push_back(target + 1);
    inner["target_particles"] = targets;
    Json children = Json::array();
    for (const StrategyNodePtr& child : step.children) {
      children.push_back(node_to_json(child));
    }
    inner["children_by_outcome"] = children;
  }
  return Json{{"node", inner}};
}

// Particle indices are 1-based on the wire.
int wire_index(const Json& j) {
  const int value = j.get<int>();
  if (value < 1) {
    throw std::invalid_argument("wire particle indices start at 1, got " +
                                std::to_string(value));
  }
  return value - 1;
}

StrategyNodePtr node_from_json(const Json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("strategy node must be a JSON object");
  }
  if (j.contains("leaf")) {
    const Json& pair = j.at("leaf");
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("leaf must hold two particle indices");
    }
    LeafReturn leaf;
    leaf.first = wire_index(pair[0]);
    leaf.second = wire_index(pair[1]);
    return std::make_shared<StrategyNode>(StrategyNode{leaf});
  }
  if (!j.contains("node")) {
    throw std::invalid_argument("strategy node needs a 'leaf' or 'node' key");
  }
  const Json& inner = j.at("node");
  const Json& action = inner.at("action");
  const Json& targets = inner.at("target_particles");
  const Json& children = inner.at("children_by_outcome");
  const std::string type = action.at("type").get<std::string>();
  if (type == "apply") {
    if (targets.size() != 1) {
      throw std::invalid_argument("an apply node takes exactly one target");
    }
    if (children.size() != 1) {
      throw std::invalid_argument("an apply node takes exactly one child");
    }
    ApplyStep step;
    step.target = wire_index(targets[0]);
    step.map = Bijection(action.at("table").get<std::array<int, 4>>());
    step.next = node_from_json(children[0]);
    return std::make_shared<StrategyNode>(StrategyNode{std::move(step)});
  }
  if (type == "measure") {
    MeasureStep step;
    for (const Json& t : targets) {
      step.targets.push_back(wire_index(t));
    }
    step.measurement = measurement_from_json(action.at("measurement"));
    for (const Json& child : children) {
      step.children.push_back(node_from_json(child));
    }
    return std::make_shared<StrategyNode>(StrategyNode{std::move(step)});
  }
  throw std::invalid_argument("unknown action type: " + type);
}

}  // namespace

Strategy null_strategy() {
  return Strategy{
      std::make_shared<StrategyNode>(StrategyNode{LeafReturn{0, 1}})};
}

int strategy_depth(const Strategy& strategy) {
  return node_depth(strategy.root);
}

void validate_strategy(const Strategy& strategy, int num_particles) {
  if (num_particles < 2) {
    throw std::invalid_argument("the adversary needs at least two particles");
  }
  validate_node(strategy.root, num_particles);
}

Json strategy_to_json(const Strategy& strategy) {
  return node_to_json(strategy.root);
}

Strategy strategy_from_json(const Json& j) {
  return Strategy{node_from_json(j)};
}

Strategy load_strategy_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open strategy file: " + path);
  }
  Json j = Json::parse(in);
  return strategy_from_json(j);
}

}  // namespace tetra::cloning
