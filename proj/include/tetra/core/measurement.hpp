#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tetra/core/bijection.hpp"
#include "tetra/core/state.hpp"
#include "tetra/rng.hpp"

namespace tetra {

class Rng;

// One outcome of a measurement: the set of states mapped to that outcome,
// held as a matrix whose rows are states and whose columns are particles.
struct OutcomeSet {
  int label = 0;
  std::vector<SystemState> rows;
};

// A measurement is a labeled partition of the whole state space. Validity
// (validate_measurement) is the gate every measurement must pass before it
// can be used by the dynamics.
struct Measurement {
  std::size_t num_particles = 0;
  std::vector<OutcomeSet> outcome_sets;

  static Measurement from_rows(
      std::size_t num_particles,
      const std::vector<std::vector<std::vector<int>>>& outcome_rows);
};

enum class Violation {
  kNone,
  kDuplicateRow,        // an outcome set is not a set
  kSingleValuedColumn,  // fewer than two values in a column
  kBelowQuarter,        // a value occurs in under 25% of a column
  kOverlappingSets,     // a state appears in two outcome sets
  kMissingState,        // a state appears in no outcome set
};

struct ValidityReport {
  bool ok = true;
  Violation violation = Violation::kNone;
  int outcome = -1;  // outcome-set index, when applicable
  int column = -1;   // 0-based column, for column violations
  std::string message;

  static ValidityReport pass() { return ValidityReport{}; }
  static ValidityReport fail(Violation v, int outcome, int column,
                             std::string message);
};

// Checks the set/column constraints on one outcome set: rows distinct,
// every column showing at least two values, every occurring value covering
// at least a quarter of the column (exact comparison 4*count >= L).
// Throws std::invalid_argument on an empty or ragged row list.
ValidityReport validate_outcome_set(const std::vector<SystemState>& rows);

// Full check: every outcome set individually valid, sets pairwise disjoint,
// and their union covering all 4^N states. Throws std::invalid_argument if
// N exceeds kMaxParticles ("state space too large for explicit validation").
ValidityReport validate_measurement(const Measurement& m);

// The outcome determined by the state: the unique r with x in the r-th set.
// Requires a valid measurement of matching width.
int find_outcome(const Measurement& m, const SystemState& x);

struct MeasureResult {
  int outcome = 0;
  SystemState post_state;
};

// Measurement dynamics: the outcome is determined by the state; the
// post-measurement state is resampled uniformly from the outcome's rows.
// Repeating the measurement therefore reproduces the outcome.
MeasureResult measure(const Measurement& m, const SystemState& x, Rng& rng);

// Applies a bijection to one particle (0-based index), leaving the rest of
// the system untouched.
SystemState apply_local_map(const SystemState& x, std::size_t particle_index,
                            const Bijection& map);

// Dense state -> outcome table for hot paths (search, batch trials).
class OutcomeIndex {
 public:
  explicit OutcomeIndex(const Measurement& m);

  int outcome_of_code(std::size_t code) const { return table_[code]; }
  int outcome_of(const SystemState& x) const {
    return table_[x.encode()];
  }

 private:
  std::vector<std::int32_t> table_;
};

}  // namespace tetra
