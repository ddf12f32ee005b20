#pragma once

#include <string>

#include "tetra/core/measurement.hpp"
#include "tetra/rng.hpp"
#include "tetra/spacetime/world.hpp"

namespace tetra::bell {

// The fixed two-particle, four-outcome joint measurement that plays the
// role of a Bell measurement here: outcome r collects the four states
// (a, (a - r) mod 4), a = 0..3, so the outcome reveals only the cyclic
// difference of the two values and nothing about either value alone.
Measurement bell_measurement();

// A correlated pair as produced by measuring two fresh particles jointly.
struct BellPairRecord {
  int pair_outcome = 0;  // r: the preparation measurement's outcome
  int ontic_y = 0;       // god view; the pair state is (y, (y - r) mod 4)
  spacetime::ParticleId first = 0;
  spacetime::ParticleId second = 0;
};

// Spawns two particles at `source` in a uniformly random joint state and
// measures bell_measurement() on them. Afterwards the pair is (y, y - r)
// with y unknown to every agent; only the difference r is public.
BellPairRecord prepare_pair(spacetime::World& world, spacetime::Coord source,
                            Rng& rng, const std::string& actor = "source");

// Rotates the second particle by the pair outcome, turning (y, y - r) into
// the matched pair (y, y). The returned record has pair_outcome 0.
BellPairRecord normalize_pair(spacetime::World& world,
                              const BellPairRecord& record,
                              const std::string& actor = "source");

// A random valid two-particle measurement for property tests: either a
// product of two single-particle partitions or bell_measurement(), with
// each column's values relabeled by a random bijection and the outcome
// order shuffled. Column relabeling and outcome reordering both preserve
// validity, so every sample passes validate_measurement.
Measurement random_pair_measurement(Rng& rng);

}  // namespace tetra::bell
