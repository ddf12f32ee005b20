#pragma once

#include "tetra/json.hpp"
#include "tetra/spacetime/log.hpp"

namespace tetra::spacetime {

// Events serialize as {"tick", "actor", "kind", "payload"}; the payload
// fields depend on the kind. Round-trips exactly.
Json event_to_json(const Event& event);
Event event_from_json(const Json& j);

Json log_to_json(const WorldLog& log);
WorldLog log_from_json(const Json& j);

WorldLog load_log_file(const std::string& path);

}  // namespace tetra::spacetime
