#pragma once

#include <string>

#include "tetra/core/measurement.hpp"
#include "tetra/core/mixture.hpp"
#include "tetra/json.hpp"

namespace tetra {

// Measurement wire format:
//   {"num_particles": N, "outcomes": [[[row ints]...]...]}
// with outcomes labeled 0..R-1 in array order and rows as arrays of N
// integers in 0..3.
Json measurement_to_json(const Measurement& m);
Measurement measurement_from_json(const Json& j);

// Mixture wire format: [{"state": [...], "p": "num/den"}, ...] with exact
// rational probability strings.
Json mixture_to_json(const Mixture& mixture);
Mixture mixture_from_json(const Json& j);

Measurement load_measurement_file(const std::string& path);

}  // namespace tetra
