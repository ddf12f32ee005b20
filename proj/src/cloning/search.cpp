#include "tetra/cloning/search.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <sstream>
#include <utility>

#include "tetra/bell/bell.hpp"
#include "tetra/core/enumerate.hpp"

namespace tetra::cloning {

namespace {

int value_at(std::size_t code, int particle) {
  return static_cast<int>((code >> (2 * particle)) & 3u);
}

std::size_t with_value(std::size_t code, int particle, int value) {
  const std::size_t mask = std::size_t{3} << (2 * particle);
  return (code & ~mask) |
         (static_cast<std::size_t>(value) << (2 * particle));
}

// One point of the challenge's probability space: which preparation ran,
// which outcome the verifier keeps, and the current hidden values.
struct AtomKey {
  int prep = 0;
  int outcome = 0;
  std::size_t code = 0;
  auto operator<=>(const AtomKey&) const = default;
};

using Distribution = std::map<AtomKey, Rational>;

struct Candidate {
  Rational value;
  StrategyNodePtr node;
};

class Evaluator {
 public:
  Evaluator(int num_particles, const std::vector<Measurement>& preparations)
      : num_particles_(num_particles) {
    for (const Measurement& p : preparations) {
      std::array<int, 4> table{};
      for (int v = 0; v < 4; ++v) {
        table[v] = find_outcome(p, SystemState{v});
      }
      prep_outcome_.push_back(table);
    }
  }

  Distribution initial() const {
    Distribution dist;
    const std::size_t codes = state_space_size(num_particles_);
    const Rational weight(
        1, static_cast<std::int64_t>(prep_outcome_.size() * codes));
    for (int p = 0; p < static_cast<int>(prep_outcome_.size()); ++p) {
      for (std::size_t code = 0; code < codes; ++code) {
        const int r0 = prep_outcome_[p][value_at(code, 0)];
        dist[AtomKey{p, r0, code}] += weight;
      }
    }
    return dist;
  }

  Rational leaf_value(const Distribution& dist, int first,
                      int second) const {
    Rational total;
    for (const auto& [atom, weight] : dist) {
      const auto& table = prep_outcome_[atom.prep];
      if (table[value_at(atom.code, first)] == atom.outcome &&
          table[value_at(atom.code, second)] == atom.outcome) {
        total += weight;
      }
    }
    return total;
  }

  Distribution applied(const Distribution& dist, int target,
                       const Bijection& map) const {
    Distribution out;
    for (const auto& [atom, weight] : dist) {
      AtomKey moved = atom;
      moved.code =
          with_value(atom.code, target, map(value_at(atom.code, target)));
      out[moved] += weight;
    }
    return out;
  }

  std::vector<Distribution> measured(const Distribution& dist,
                                     const std::vector<int>& targets,
                                     const Measurement& m) const {
    const OutcomeIndex index(m);
    std::vector<Distribution> children(m.outcome_sets.size());
    for (const auto& [atom, weight] : dist) {
      std::size_t sub = 0;
      for (std::size_t i = 0; i < targets.size(); ++i) {
        sub = with_value(sub, static_cast<int>(i),
                         value_at(atom.code, targets[i]));
      }
      const int r = index.outcome_of_code(sub);
      const auto& rows = m.outcome_sets[r].rows;
      const Rational share =
          weight / Rational::from_int(static_cast<std::int64_t>(rows.size()));
      for (const SystemState& row : rows) {
        AtomKey moved = atom;
        for (std::size_t i = 0; i < targets.size(); ++i) {
          moved.code = with_value(moved.code, targets[i],
                                  row.value(i));
        }
        children[r][moved] += share;
      }
    }
    return children;
  }

  int num_particles() const { return num_particles_; }

 private:
  int num_particles_;
  std::vector<std::array<int, 4>> prep_outcome_;
};

std::string fingerprint(const Distribution& dist, int depth) {
  std::ostringstream out;
  out << depth << '#';
  for (const auto& [atom, weight] : dist) {
    out << atom.prep << '.' << atom.outcome << '.' << atom.code << '='
        << weight.to_string() << ';';
  }
  return out.str();
}

class Searcher {
 public:
  Searcher(const Evaluator& eval, const std::vector<CatalogAction>& catalog,
           long long budget)
      : eval_(eval), catalog_(catalog), budget_(budget) {}

  Candidate best_of(const Distribution& dist, int depth) {
    const std::string key = fingerprint(dist, depth);
    if (auto it = memo_.find(key); it != memo_.end()) {
      return it->second;
    }
    if (++explored_ > budget_) {
      throw BudgetExceeded(budget_);
    }

    Candidate best = best_leaf(dist);
    if (depth > 0) {
      for (const CatalogAction& action : catalog_) {
        Candidate candidate;
        if (const auto* apply = std::get_if<CatalogApply>(&action.body)) {
          const Candidate next =
              best_of(eval_.applied(dist, apply->target, apply->map),
                      depth - 1);
          candidate.value = next.value;
          candidate.node = std::make_shared<StrategyNode>(
              StrategyNode{ApplyStep{apply->target, apply->map, next.node}});
        } else {
          const auto& step = std::get<CatalogMeasure>(action.body);
          const std::vector<Distribution> children =
              eval_.measured(dist, step.targets, step.measurement);
          MeasureStep built;
          built.targets = step.targets;
          built.measurement = step.measurement;
          for (const Distribution& child : children) {
            const Candidate next = best_of(child, depth - 1);
            candidate.value += next.value;
            built.children.push_back(next.node);
          }
          candidate.node = std::make_shared<StrategyNode>(
              StrategyNode{std::move(built)});
        }
        if (candidate.value > best.value) {
          best = std::move(candidate);
        }
      }
    }
    memo_.emplace(key, best);
    return best;
  }

  long long explored() const { return explored_; }

 private:
  Candidate best_leaf(const Distribution& dist) const {
    Candidate best;
    bool have = false;
    for (int f = 0; f < eval_.num_particles(); ++f) {
      for (int s = 0; s < eval_.num_particles(); ++s) {
        if (f == s) continue;
        const Rational value = eval_.leaf_value(dist, f, s);
        if (!have || value > best.value) {
          have = true;
          best.value = value;
          best.node = std::make_shared<StrategyNode>(
              StrategyNode{LeafReturn{f, s}});
        }
      }
    }
    return best;
  }

  const Evaluator& eval_;
  const std::vector<CatalogAction>& catalog_;
  long long budget_;
  long long explored_ = 0;
  std::map<std::string, Candidate> memo_;
};

Rational value_of(const Evaluator& eval, const Distribution& dist,
                  const StrategyNodePtr& node) {
  if (const auto* leaf = std::get_if<LeafReturn>(&node->body)) {
    return eval.leaf_value(dist, leaf->first, leaf->second);
  }
  if (const auto* apply = std::get_if<ApplyStep>(&node->body)) {
    return value_of(eval, eval.applied(dist, apply->target, apply->map),
                    apply->next);
  }
  const auto& step = std::get<MeasureStep>(node->body);
  const std::vector<Distribution> children =
      eval.measured(dist, step.targets, step.measurement);
  Rational total;
  for (std::size_t r = 0; r < children.size(); ++r) {
    total += value_of(eval, children[r], step.children[r]);
  }
  return total;
}

void check_preparations(const std::vector<Measurement>& preparations) {
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
}

std::string partition_text(const Measurement& m) {
  std::string text;
  for (const OutcomeSet& set : m.outcome_sets) {
    if (!text.empty()) text += '|';
    for (const SystemState& row : set.rows) {
      text += static_cast<char>('0' + row.value(0));
    }
  }
  return text;
}

}  // namespace

std::vector<CatalogAction> default_catalog(int num_particles) {
  std::vector<CatalogAction> catalog;
  for (int i = 0; i < num_particles; ++i) {
    for (int k = 0; k < 4; ++k) {
      catalog.push_back(CatalogAction{
          "rotate+" + std::to_string(k) + "@" + std::to_string(i + 1),
          CatalogApply{i, rotation(k)}});
    }
  }
  const std::vector<Measurement> singles = enumerate_valid_measurements(1);
  for (int i = 0; i < num_particles; ++i) {
    for (const Measurement& m : singles) {
      catalog.push_back(CatalogAction{
          "measure " + partition_text(m) + "@" + std::to_string(i + 1),
          CatalogMeasure{{i}, m}});
    }
  }
  for (int i = 0; i < num_particles; ++i) {
    for (int j = i + 1; j < num_particles; ++j) {
      catalog.push_back(CatalogAction{
          "measure difference@(" + std::to_string(i + 1) + "," +
              std::to_string(j + 1) + ")",
          CatalogMeasure{{i, j}, bell::bell_measurement()}});
    }
  }
  return catalog;
}

SearchResult search_strategies(int num_particles, int depth,
                               const std::vector<CatalogAction>& catalog,
                               const std::vector<Measurement>& preparations,
                               const SearchOptions& options) {
  if (num_particles < 2 || num_particles > 3) {
    throw std::invalid_argument(
        "exhaustive search supports 2 or 3 particles");
  }
  if (depth < 0 || depth > 2) {
    throw std::invalid_argument("exhaustive search supports depth 0..2");
  }
  check_preparations(preparations);
  for (const CatalogAction& action : catalog) {
    if (const auto* apply = std::get_if<CatalogApply>(&action.body)) {
      if (apply->target < 0 || apply->target >= num_particles) {
        throw std::invalid_argument("catalog action '" + action.label +
                                    "' targets a missing particle");
      }
    } else {
      const auto& step = std::get<CatalogMeasure>(action.body);
      Strategy probe{std::make_shared<StrategyNode>(StrategyNode{MeasureStep{
          step.targets, step.measurement,
          std::vector<StrategyNodePtr>(step.measurement.outcome_sets.size(),
                                       null_strategy().root)}})};
      validate_strategy(probe, num_particles);
    }
  }

  const Evaluator eval(num_particles, preparations);
  Searcher searcher(eval, catalog, options.node_budget);
  const Candidate best = searcher.best_of(eval.initial(), depth);

  SearchResult result;
  result.best = Strategy{best.node};
  result.max_pass_probability = best.value;
  result.nodes_explored = searcher.explored();
  return result;
}

Rational exact_pass_probability(const Strategy& strategy, int num_particles,
                                const std::vector<Measurement>& preparations) {
  check_preparations(preparations);
  validate_strategy(strategy, num_particles);
  const Evaluator eval(num_particles, preparations);
  return value_of(eval, eval.initial(), strategy.root);
}

}  // namespace tetra::cloning
