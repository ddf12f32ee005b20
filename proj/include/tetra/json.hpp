#pragma once

#include <json.hpp>

namespace tetra {

// Insertion-ordered JSON keeps emitted documents byte-stable for a given
// seed, which the CLI's determinism contract relies on.
using Json = nlohmann::ordered_json;

}  // namespace tetra
