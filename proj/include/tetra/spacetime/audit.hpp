#pragma once

#include <cstddef>
#include <string>

#include "tetra/spacetime/log.hpp"

namespace tetra::spacetime {

struct AuditReport {
  bool ok = true;
  std::size_t event_index = 0;  // first violating event, when !ok
  std::string message;

  static AuditReport pass() { return AuditReport{}; }
};

// Post-hoc locality audit of a world log. Passes iff
//   (i)   every joint measurement's participants share one location, both
//         per the event payload and per the reconstructed trajectories,
//   (ii)  no particle's position changes faster than one cell per tick
//         (checked as a light-cone bound between consecutive sightings),
//   (iii) every message arrives no earlier than send tick plus distance,
//         and matches a unique prior send.
// Fails at the first violating event. A structurally malformed log
// (non-monotone ticks) throws std::domain_error instead.
//
// The audit is pure: same log, same report.
AuditReport audit_locality(const WorldLog& log);

}  // namespace tetra::spacetime
