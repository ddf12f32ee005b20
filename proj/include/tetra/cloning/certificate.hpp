#pragma once

#include <utility>

#include "tetra/core/measurement.hpp"
#include "tetra/rational.hpp"
#include "tetra/rng.hpp"

namespace tetra::cloning {

// The exact fraction of the outcome set's rows whose entries at the two
// designated columns differ from (target, target): the conditional
// probability, given this outcome, that a both-particles-equal-target
// requirement fails on the post-measurement state. Whenever some row does
// carry (target, target) there, the column rule forces at least a quarter
// of each designated column to differ from the target, so the result is
// at least 1/4: a perfect pass is impossible on any branch that could
// have produced the wanted pair.
// Throws std::invalid_argument on an invalid outcome set, designated
// columns out of range or equal, or a target outside 0..3.
Rational failure_certificate(const OutcomeSet& c,
                             std::pair<int, int> designated_columns,
                             int target_value);

// Constructive sampler over valid outcome sets, for property tests.
// Families: a random value subset (one particle); four rows whose columns
// are random bijection images of the row index (value counts 1/4 each);
// eight rows stacked from two such layers offset to avoid duplicates
// (value counts 2/8 each); and, from three particles up, a five-row
// template with 2/5 and 3/5 value counts, column-relabeled and shuffled.
// Every sample is revalidated before being returned.
OutcomeSet sample_valid_outcome_set(int num_particles, Rng& rng);

}  // namespace tetra::cloning
