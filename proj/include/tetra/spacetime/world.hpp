#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "tetra/core/bijection.hpp"
#include "tetra/core/measurement.hpp"
#include "tetra/rng.hpp"
#include "tetra/spacetime/log.hpp"

namespace tetra::spacetime {

struct ColocationReport {
  bool ok = true;
  std::string message;
};

class World;

// Joint measurements require one shared location; this is what every joint
// measurement entry point checks first. A single particle passes trivially.
ColocationReport require_colocated(const World& world,
                                   std::span<const ParticleId> particles);

// A 1-D lattice world: particle positions, a global integer clock, and a
// classical message channel, all capped at one cell per tick. Hidden
// particle values ride along so protocols have a single home; they are
// reachable only through the god_* interface, which agent logic must not
// touch.
class World {
 public:
  World() = default;

  ParticleId spawn(int value, Coord position,
                   const std::string& actor = "world");

  // Walks the particle to `destination` one cell per tick, logging each
  // step; the clock advances by the covered distance.
  void move_particle(ParticleId particle, Coord destination,
                     const std::string& actor = "world");

  // Moves several particles at once, still one cell per tick each; the
  // clock advances until the last one arrives.
  void transport(const std::vector<std::pair<ParticleId, Coord>>& moves,
                 const std::string& actor = "world");

  // Measures the listed particles jointly (co-location enforced); hidden
  // values update per the measurement dynamics and the outcome is returned.
  int measure(const Measurement& m,
              const std::vector<ParticleId>& particles, Rng& rng,
              const std::string& actor);

  void apply_map(ParticleId particle, const Bijection& map,
                 const std::string& actor);

  struct SentMessage {
    MessageId id = 0;
    Tick delivery_tick = 0;
  };

  // Classical channel at the same speed cap: readable at the destination
  // after |destination - origin| ticks.
  SentMessage send_message(int value, Coord origin, Coord destination,
                           const std::string& actor);

  // Waits (advancing the clock) until the message is deliverable, then
  // returns its value.
  int receive_message(MessageId id, const std::string& actor);

  Tick clock() const { return clock_; }
  Coord position(ParticleId particle) const;
  const WorldLog& log() const { return log_; }

  // God view: simulator-only access to ontic values, for tests and flagged
  // output. Agent-level decisions must never depend on these.
  int god_value(ParticleId particle) const;
  void god_set_value(ParticleId particle, int value);

 private:
  struct Particle {
    Coord position = 0;
    int value = 0;
  };
  struct Pending {
    int value = 0;
    Coord origin = 0;
    Coord destination = 0;
    Tick send_tick = 0;
    Tick delivery_tick = 0;
    bool delivered = false;
  };

  const Particle& particle_at(ParticleId id) const;
  Particle& particle_at(ParticleId id);

  std::map<ParticleId, Particle> particles_;
  std::map<MessageId, Pending> messages_;
  Tick clock_ = 0;
  ParticleId next_particle_ = 1;
  MessageId next_message_ = 0;
  WorldLog log_;
};

}  // namespace tetra::spacetime
