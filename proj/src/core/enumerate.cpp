#include "tetra/core/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace tetra {

Measurement canonical_form(const Measurement& m) {
  Measurement out = m;
  for (auto& set : out.outcome_sets) {
    std::sort(set.rows.begin(), set.rows.end());
  }
  std::sort(out.outcome_sets.begin(), out.outcome_sets.end(),
            [](const OutcomeSet& a, const OutcomeSet& b) {
              return a.rows.front() < b.rows.front();
            });
  for (std::size_t r = 0; r < out.outcome_sets.size(); ++r) {
    out.outcome_sets[r].label = static_cast<int>(r);
  }
  return out;
}

bool equivalent_up_to_relabeling(const Measurement& a, const Measurement& b) {
  if (a.num_particles != b.num_particles) return false;
  const Measurement ca = canonical_form(a);
  const Measurement cb = canonical_form(b);
  if (ca.outcome_sets.size() != cb.outcome_sets.size()) return false;
  for (std::size_t r = 0; r < ca.outcome_sets.size(); ++r) {
    if (ca.outcome_sets[r].rows != cb.outcome_sets[r].rows) return false;
  }
  return true;
}

namespace {

// Visits every set partition of {0,..,n-1} via restricted growth strings.
template <typename Visitor>
void for_each_set_partition(int n, Visitor visit) {
  std::vector<int> assignment(n, 0);
  for (;;) {
    int blocks = 0;
    for (int v : assignment) blocks = std::max(blocks, v + 1);
    std::vector<std::vector<int>> partition(blocks);
    for (int i = 0; i < n; ++i) partition[assignment[i]].push_back(i);
    visit(partition);

    // Next restricted growth string: assignment[i] <= 1 + max(prefix).
    int i = n - 1;
    for (; i > 0; --i) {
      int prefix_max = 0;
      for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, assignment[j]);
      if (assignment[i] <= prefix_max) {
        ++assignment[i];
        break;
      }
      assignment[i] = 0;
    }
    if (i == 0) break;
  }
}

}  // namespace

std::vector<Measurement> enumerate_valid_measurements(int num_particles) {
  if (num_particles != 1) {
    throw std::invalid_argument(
        "exhaustive enumeration supports one particle only");
  }
  std::vector<Measurement> found;
  for_each_set_partition(kParticleValues, [&](const auto& partition) {
    for (const auto& block : partition) {
      if (block.size() < 2) return;
    }
    Measurement m;
    m.num_particles = 1;
    for (const auto& block : partition) {
      OutcomeSet set;
      set.label = static_cast<int>(m.outcome_sets.size());
      for (int v : block) set.rows.push_back(SystemState{v});
      m.outcome_sets.push_back(std::move(set));
    }
    found.push_back(canonical_form(m));
  });
  std::sort(found.begin(), found.end(),
            [](const Measurement& a, const Measurement& b) {
              if (a.outcome_sets.size() != b.outcome_sets.size()) {
                return a.outcome_sets.size() < b.outcome_sets.size();
              }
              for (std::size_t r = 0; r < a.outcome_sets.size(); ++r) {
                if (a.outcome_sets[r].rows != b.outcome_sets[r].rows) {
                  return a.outcome_sets[r].rows < b.outcome_sets[r].rows;
                }
              }
              return false;
            });
  return found;
}

}  // namespace tetra
