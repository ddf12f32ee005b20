#include "tetra/core/measurement.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace tetra {

Measurement Measurement::from_rows(
    std::size_t num_particles,
    const std::vector<std::vector<std::vector<int>>>& outcome_rows) {
  Measurement m;
  m.num_particles = num_particles;
  m.outcome_sets.reserve(outcome_rows.size());
  int label = 0;
  for (const auto& rows : outcome_rows) {
    OutcomeSet set;
    set.label = label++;
    set.rows.reserve(rows.size());
    for (const auto& row : rows) {
      SystemState state(row);
      if (state.particle_count() != num_particles) {
        throw std::invalid_argument("row width does not match num_particles");
      }
      set.rows.push_back(std::move(state));
    }
    m.outcome_sets.push_back(std::move(set));
  }
  return m;
}

ValidityReport ValidityReport::fail(Violation v, int outcome, int column,
                                    std::string message) {
  ValidityReport report;
  report.ok = false;
  report.violation = v;
  report.outcome = outcome;
  report.column = column;
  report.message = std::move(message);
  return report;
}

namespace {

ValidityReport check_outcome_set(const std::vector<SystemState>& rows,
                                 int outcome_label) {
  if (rows.empty()) {
    throw std::invalid_argument("empty outcome set");
  }
  const std::size_t width = rows.front().particle_count();
  for (const auto& row : rows) {
    if (row.particle_count() != width) {
      throw std::invalid_argument("outcome set rows have unequal widths");
    }
  }

  // Set-ness: duplicate rows first.
  std::vector<std::size_t> codes;
  codes.reserve(rows.size());
  for (const auto& row : rows) codes.push_back(row.encode());
  std::vector<std::size_t> sorted = codes;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) {
      SystemState dup = SystemState::decode(sorted[i], width);
      std::string text = "(";
      for (std::size_t n = 0; n < width; ++n) {
        text += std::to_string(dup.value(n));
        if (n + 1 < width) text += ",";
      }
      text += ")";
      return ValidityReport::fail(
          Violation::kDuplicateRow, outcome_label, -1,
          "outcome set contains the row " + text + " twice");
    }
  }

  // Column rule. L >= 2 is implied: a single row makes every column
  // single-valued.
  const std::size_t row_count = rows.size();
  for (std::size_t col = 0; col < width; ++col) {
    std::array<std::size_t, kParticleValues> counts{};
    for (const auto& row : rows) {
      ++counts[row.value(col)];
    }
    int distinct = 0;
    for (std::size_t c : counts) {
      if (c > 0) ++distinct;
    }
    if (distinct < 2) {
      return ValidityReport::fail(
          Violation::kSingleValuedColumn, outcome_label, static_cast<int>(col),
          "column rule: column " + std::to_string(col) +
              " shows fewer than two values");
    }
    for (int v = 0; v < kParticleValues; ++v) {
      // "at least 25%" with equality allowed: 4*count >= L, exactly.
      if (counts[v] > 0 && 4 * counts[v] < row_count) {
        return ValidityReport::fail(
            Violation::kBelowQuarter, outcome_label, static_cast<int>(col),
            "column rule: value " + std::to_string(v) + " covers under a "
            "quarter of column " + std::to_string(col));
      }
    }
  }
  return ValidityReport::pass();
}

}  // namespace

ValidityReport validate_outcome_set(const std::vector<SystemState>& rows) {
  return check_outcome_set(rows, -1);
}

ValidityReport validate_measurement(const Measurement& m) {
  if (m.num_particles == 0) {
    throw std::invalid_argument("measurement on zero particles");
  }
  if (m.num_particles > kMaxParticles) {
    throw std::invalid_argument("state space too large for explicit validation");
  }
  if (m.outcome_sets.empty()) {
    throw std::invalid_argument("measurement with no outcome sets");
  }

  for (std::size_t r = 0; r < m.outcome_sets.size(); ++r) {
    const auto& set = m.outcome_sets[r];
    for (const auto& row : set.rows) {
      if (row.particle_count() != m.num_particles) {
        throw std::invalid_argument("row width does not match num_particles");
      }
    }
    ValidityReport report = check_outcome_set(set.rows, static_cast<int>(r));
    if (!report.ok) {
      return report;
    }
  }

  // Disjointness and exhaustiveness over the full state space.
  const std::size_t space = state_space_size(m.num_particles);
  std::vector<std::int32_t> owner(space, -1);
  for (std::size_t r = 0; r < m.outcome_sets.size(); ++r) {
    for (const auto& row : m.outcome_sets[r].rows) {
      const std::size_t code = row.encode();
      if (owner[code] >= 0) {
        return ValidityReport::fail(
            Violation::kOverlappingSets, static_cast<int>(r), -1,
            "outcome sets " + std::to_string(owner[code]) +
                " and " + std::to_string(r) + " are not disjoint");
      }
      owner[code] = static_cast<std::int32_t>(r);
    }
  }
  for (std::size_t code = 0; code < space; ++code) {
    if (owner[code] < 0) {
      return ValidityReport::fail(
          Violation::kMissingState, -1, -1,
          "state with code " + std::to_string(code) +
              " appears in no outcome set");
    }
  }
  return ValidityReport::pass();
}

int find_outcome(const Measurement& m, const SystemState& x) {
  if (x.particle_count() != m.num_particles) {
    throw std::invalid_argument("state width does not match measurement");
  }
  for (std::size_t r = 0; r < m.outcome_sets.size(); ++r) {
    for (const auto& row : m.outcome_sets[r].rows) {
      if (row == x) {
        return static_cast<int>(r);
      }
    }
  }
  throw std::invalid_argument("state not covered by any outcome set");
}

MeasureResult measure(const Measurement& m, const SystemState& x, Rng& rng) {
  const int r = find_outcome(m, x);
  const auto& rows = m.outcome_sets[r].rows;
  const std::uint32_t pick = rng.below(static_cast<std::uint32_t>(rows.size()));
  return MeasureResult{r, rows[pick]};
}

SystemState apply_local_map(const SystemState& x, std::size_t particle_index,
                            const Bijection& map) {
  if (particle_index >= x.particle_count()) {
    throw std::out_of_range("particle index out of range");
  }
  std::vector<int> values(x.values().begin(), x.values().end());
  values[particle_index] = map(values[particle_index]);
  return SystemState(values);
}

OutcomeIndex::OutcomeIndex(const Measurement& m) {
  table_.assign(state_space_size(m.num_particles), -1);
  for (std::size_t r = 0; r < m.outcome_sets.size(); ++r) {
    for (const auto& row : m.outcome_sets[r].rows) {
      table_[row.encode()] = static_cast<std::int32_t>(r);
    }
  }
  for (std::int32_t owner : table_) {
    if (owner < 0) {
      throw std::invalid_argument("measurement does not cover the state space");
    }
  }
}

}  // namespace tetra
