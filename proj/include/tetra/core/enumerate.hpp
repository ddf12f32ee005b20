#pragma once

#include <vector>

#include "tetra/core/measurement.hpp"

namespace tetra {

// Canonical form: rows sorted within each outcome set, outcome sets sorted
// by their smallest row, labels renumbered in that order. Measurements that
// differ only by outcome relabeling share one canonical form.
Measurement canonical_form(const Measurement& m);

bool equivalent_up_to_relabeling(const Measurement& a, const Measurement& b);

// All valid single-particle measurements in canonical form: the set
// partitions of {0,1,2,3} whose blocks each have at least two elements.
// There are exactly four. Only num_particles == 1 is supported here; a
// constructive two-particle sampler lives with the Bell machinery.
std::vector<Measurement> enumerate_valid_measurements(int num_particles);

}  // namespace tetra
