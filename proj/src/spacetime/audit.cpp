#include "tetra/spacetime/audit.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>

namespace tetra::spacetime {

namespace {

struct Sighting {
  Tick tick = 0;
  Coord position = 0;
  bool known = false;
};

struct Auditor {
  std::map<ParticleId, Sighting> last_seen;
  std::map<MessageId, MsgSendEvent> sends;
  std::map<MessageId, Tick> send_ticks;
  AuditReport failure;
  std::size_t index = 0;

  bool fail(const std::string& message) {
    failure.ok = false;
    failure.event_index = index;
    failure.message = "event " + std::to_string(index) + ": " + message;
    return false;
  }

  // Light-cone bound between the last sighting of a particle and a new one.
  bool sight(ParticleId particle, Tick tick, Coord position) {
    Sighting& prev = last_seen[particle];
    if (prev.known) {
      const Tick elapsed = tick - prev.tick;
      const Coord displacement = std::llabs(position - prev.position);
      if (displacement > elapsed) {
        return fail("particle " + std::to_string(particle) + " covered " +
                    std::to_string(displacement) + " cells in " +
                    std::to_string(elapsed) + " ticks");
      }
    }
    prev = Sighting{tick, position, true};
    return true;
  }

  bool operator()(Tick tick, const MoveEvent& e) {
    if (std::llabs(e.to - e.from) > 1) {
      return fail("particle " + std::to_string(e.particle) + " moved " +
                  std::to_string(std::llabs(e.to - e.from)) +
                  " cells in one step");
    }
    const Sighting& prev = last_seen[e.particle];
    if (prev.known && e.from != prev.position) {
      return fail("particle " + std::to_string(e.particle) +
                  " moved from a position it was not at");
    }
    return sight(e.particle, tick, e.to);
  }

  bool operator()(Tick tick, const JointMeasureEvent& e) {
    if (e.particles.empty() || e.particles.size() != e.positions.size()) {
      return fail("joint measurement with malformed participant list");
    }
    for (std::size_t i = 0; i < e.particles.size(); ++i) {
      if (e.positions[i] != e.positions[0]) {
        return fail("joint measurement on particles " +
                    std::to_string(e.particles[0]) + " and " +
                    std::to_string(e.particles[i]) + " at distinct positions " +
                    std::to_string(e.positions[0]) + " and " +
                    std::to_string(e.positions[i]));
      }
    }
    for (std::size_t i = 0; i < e.particles.size(); ++i) {
      if (!sight(e.particles[i], tick, e.positions[i])) return false;
    }
    return true;
  }

  bool operator()(Tick tick, const LocalOpEvent& e) {
    return sight(e.particle, tick, e.position);
  }

  bool operator()(Tick tick, const MsgSendEvent& e) {
    if (sends.count(e.message) != 0) {
      return fail("message id " + std::to_string(e.message) + " sent twice");
    }
    sends[e.message] = e;
    send_ticks[e.message] = tick;
    return true;
  }

  bool operator()(Tick tick, const MsgRecvEvent& e) {
    auto it = sends.find(e.message);
    if (it == sends.end()) {
      return fail("message id " + std::to_string(e.message) +
                  " received without a matching send");
    }
    const MsgSendEvent& send = it->second;
    if (send.origin != e.origin || send.destination != e.destination ||
        send.value != e.value || send_ticks[e.message] != e.send_tick) {
      return fail("message id " + std::to_string(e.message) +
                  " received with fields differing from its send");
    }
    const Tick earliest =
        e.send_tick + std::llabs(e.destination - e.origin);
    if (tick < earliest) {
      return fail("message id " + std::to_string(e.message) +
                  " received at tick " + std::to_string(tick) +
                  ", earlier than send tick plus distance (" +
                  std::to_string(earliest) + ")");
    }
    return true;
  }
};

}  // namespace

AuditReport audit_locality(const WorldLog& log) {
  Auditor auditor;
  Tick previous = 0;
  bool first = true;
  for (std::size_t i = 0; i < log.size(); ++i) {
    const Event& event = log[i];
    if (!first && event.tick < previous) {
      throw std::domain_error("malformed log: ticks decrease at event " +
                              std::to_string(i));
    }
    first = false;
    previous = event.tick;
    auditor.index = i;
    const bool ok = std::visit(
        [&](const auto& body) { return auditor(event.tick, body); },
        event.body);
    if (!ok) {
      return auditor.failure;
    }
  }
  return AuditReport::pass();
}

}  // namespace tetra::spacetime
