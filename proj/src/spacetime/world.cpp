#include "tetra/spacetime/world.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace tetra::spacetime {

const char* kind_name(const Event& event) {
  struct Namer {
    const char* operator()(const MoveEvent&) const { return "move"; }
    const char* operator()(const JointMeasureEvent&) const {
      return "joint_measure";
    }
    const char* operator()(const LocalOpEvent&) const { return "local_op"; }
    const char* operator()(const MsgSendEvent&) const { return "msg_send"; }
    const char* operator()(const MsgRecvEvent&) const { return "msg_recv"; }
  };
  return std::visit(Namer{}, event.body);
}

ColocationReport require_colocated(const World& world,
                                   std::span<const ParticleId> particles) {
  if (particles.size() <= 1) {
    return ColocationReport{};
  }
  const Coord site = world.position(particles.front());
  for (ParticleId id : particles) {
    const Coord at = world.position(id);
    if (at != site) {
      ColocationReport report;
      report.ok = false;
      report.message = "particles " + std::to_string(particles.front()) +
                       " (at " + std::to_string(site) + ") and " +
                       std::to_string(id) + " (at " + std::to_string(at) +
                       ") are not co-located";
      return report;
    }
  }
  return ColocationReport{};
}

const World::Particle& World::particle_at(ParticleId id) const {
  auto it = particles_.find(id);
  if (it == particles_.end()) {
    throw std::out_of_range("unknown particle id " + std::to_string(id));
  }
  return it->second;
}

World::Particle& World::particle_at(ParticleId id) {
  return const_cast<Particle&>(
      static_cast<const World*>(this)->particle_at(id));
}

ParticleId World::spawn(int value, Coord position, const std::string& actor) {
  if (!is_particle_value(value)) {
    throw std::invalid_argument("particle value out of range");
  }
  const ParticleId id = next_particle_++;
  particles_[id] = Particle{position, value};
  // Entering the world is logged as a zero-length move so the auditor knows
  // the starting position.
  log_.push_back(Event{clock_, actor, MoveEvent{id, position, position}});
  return id;
}

void World::move_particle(ParticleId particle, Coord destination,
                          const std::string& actor) {
  Particle& p = particle_at(particle);
  while (p.position != destination) {
    const Coord from = p.position;
    p.position += destination > from ? 1 : -1;
    ++clock_;
    log_.push_back(Event{clock_, actor, MoveEvent{particle, from, p.position}});
  }
}

void World::transport(const std::vector<std::pair<ParticleId, Coord>>& moves,
                      const std::string& actor) {
  for (const auto& [id, dest] : moves) {
    particle_at(id);  // existence check up front
    (void)dest;
  }
  for (;;) {
    bool moved = false;
    for (const auto& [id, dest] : moves) {
      if (particle_at(id).position != dest) {
        moved = true;
      }
    }
    if (!moved) break;
    ++clock_;
    for (const auto& [id, dest] : moves) {
      Particle& p = particle_at(id);
      if (p.position == dest) continue;
      const Coord from = p.position;
      p.position += dest > from ? 1 : -1;
      log_.push_back(Event{clock_, actor, MoveEvent{id, from, p.position}});
    }
  }
}

int World::measure(const Measurement& m,
                   const std::vector<ParticleId>& particles, Rng& rng,
                   const std::string& actor) {
  if (particles.size() != m.num_particles) {
    throw std::invalid_argument(
        "measurement width does not match particle list");
  }
  const ColocationReport colocation = require_colocated(*this, particles);
  if (!colocation.ok) {
    throw std::logic_error("joint measurement rejected: " + colocation.message);
  }
  std::vector<int> values;
  std::vector<Coord> positions;
  values.reserve(particles.size());
  positions.reserve(particles.size());
  for (ParticleId id : particles) {
    const Particle& p = particle_at(id);
    values.push_back(p.value);
    positions.push_back(p.position);
  }
  const MeasureResult result = tetra::measure(m, SystemState(values), rng);
  for (std::size_t i = 0; i < particles.size(); ++i) {
    particle_at(particles[i]).value = result.post_state.value(i);
  }
  log_.push_back(Event{clock_, actor,
                       JointMeasureEvent{particles, positions, result.outcome}});
  return result.outcome;
}

void World::apply_map(ParticleId particle, const Bijection& map,
                      const std::string& actor) {
  Particle& p = particle_at(particle);
  p.value = map(p.value);
  LocalOpEvent event;
  event.particle = particle;
  event.position = p.position;
  for (int x = 0; x < 4; ++x) event.table[x] = map(x);
  log_.push_back(Event{clock_, actor, std::move(event)});
}

World::SentMessage World::send_message(int value, Coord origin,
                                       Coord destination,
                                       const std::string& actor) {
  const MessageId id = next_message_++;
  Pending pending;
  pending.value = value;
  pending.origin = origin;
  pending.destination = destination;
  pending.send_tick = clock_;
  pending.delivery_tick = clock_ + std::llabs(destination - origin);
  messages_[id] = pending;
  log_.push_back(Event{clock_, actor,
                       MsgSendEvent{id, origin, destination, value}});
  return SentMessage{id, pending.delivery_tick};
}

int World::receive_message(MessageId id, const std::string& actor) {
  auto it = messages_.find(id);
  if (it == messages_.end()) {
    throw std::out_of_range("unknown message id " + std::to_string(id));
  }
  Pending& pending = it->second;
  if (pending.delivered) {
    throw std::logic_error("message already received");
  }
  clock_ = std::max(clock_, pending.delivery_tick);
  pending.delivered = true;
  log_.push_back(Event{
      clock_, actor,
      MsgRecvEvent{id, pending.origin, pending.destination, pending.value,
                   pending.send_tick}});
  return pending.value;
}

Coord World::position(ParticleId particle) const {
  return particle_at(particle).position;
}

int World::god_value(ParticleId particle) const {
  return particle_at(particle).value;
}

void World::god_set_value(ParticleId particle, int value) {
  if (!is_particle_value(value)) {
    throw std::invalid_argument("particle value out of range");
  }
  particle_at(particle).value = value;
}

}  // namespace tetra::spacetime
