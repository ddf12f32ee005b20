#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace tetra::spacetime {

using Tick = long long;
using Coord = long long;
using ParticleId = int;
using MessageId = int;

// One unit step (or, with from == to, a particle entering the world).
struct MoveEvent {
  ParticleId particle = 0;
  Coord from = 0;
  Coord to = 0;
};

struct JointMeasureEvent {
  std::vector<ParticleId> particles;
  std::vector<Coord> positions;  // parallel to `particles`
  int outcome = 0;
};

struct LocalOpEvent {
  ParticleId particle = 0;
  Coord position = 0;
  std::array<int, 4> table{};
};

struct MsgSendEvent {
  MessageId message = 0;
  Coord origin = 0;
  Coord destination = 0;
  int value = 0;
};

struct MsgRecvEvent {
  MessageId message = 0;
  Coord origin = 0;
  Coord destination = 0;
  int value = 0;
  Tick send_tick = 0;
};

using EventBody = std::variant<MoveEvent, JointMeasureEvent, LocalOpEvent,
                               MsgSendEvent, MsgRecvEvent>;

struct Event {
  Tick tick = 0;
  std::string actor;
  EventBody body;
};

// Append-only record of everything that happened in a run; ticks are
// non-decreasing. This is what the locality auditor consumes.
using WorldLog = std::vector<Event>;

const char* kind_name(const Event& event);

}  // namespace tetra::spacetime
