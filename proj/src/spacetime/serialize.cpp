#include "tetra/spacetime/serialize.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

namespace tetra::spacetime {

namespace {

Json payload_json(const MoveEvent& e) {
  return Json{{"particle", e.particle}, {"from", e.from}, {"to", e.to}};
}

Json payload_json(const JointMeasureEvent& e) {
  return Json{{"particles", e.particles},
              {"positions", e.positions},
              {"outcome", e.outcome}};
}

Json payload_json(const LocalOpEvent& e) {
  return Json{{"particle", e.particle},
              {"position", e.position},
              {"table", e.table}};
}

Json payload_json(const MsgSendEvent& e) {
  return Json{{"message", e.message},
              {"origin", e.origin},
              {"destination", e.destination},
              {"value", e.value}};
}

Json payload_json(const MsgRecvEvent& e) {
  return Json{{"message", e.message},
              {"origin", e.origin},
              {"destination", e.destination},
              {"value", e.value},
              {"send_tick", e.send_tick}};
}

EventBody body_from_json(const std::string& kind, const Json& p) {
  if (kind == "move") {
    MoveEvent e;
    e.particle = p.at("particle").get<ParticleId>();
    e.from = p.at("from").get<Coord>();
    e.to = p.at("to").get<Coord>();
    return e;
  }
  if (kind == "joint_measure") {
    JointMeasureEvent e;
    e.particles = p.at("particles").get<std::vector<ParticleId>>();
    e.positions = p.at("positions").get<std::vector<Coord>>();
    e.outcome = p.at("outcome").get<int>();
    return e;
  }
  if (kind == "local_op") {
    LocalOpEvent e;
    e.particle = p.at("particle").get<ParticleId>();
    e.position = p.at("position").get<Coord>();
    e.table = p.at("table").get<std::array<int, 4>>();
    return e;
  }
  if (kind == "msg_send") {
    MsgSendEvent e;
    e.message = p.at("message").get<MessageId>();
    e.origin = p.at("origin").get<Coord>();
    e.destination = p.at("destination").get<Coord>();
    e.value = p.at("value").get<int>();
    return e;
  }
  if (kind == "msg_recv") {
    MsgRecvEvent e;
    e.message = p.at("message").get<MessageId>();
    e.origin = p.at("origin").get<Coord>();
    e.destination = p.at("destination").get<Coord>();
    e.value = p.at("value").get<int>();
    e.send_tick = p.at("send_tick").get<Tick>();
    return e;
  }
  throw std::invalid_argument("unknown event kind: " + kind);
}

}  // namespace

Json event_to_json(const Event& event) {
  Json j;
  j["tick"] = event.tick;
  j["actor"] = event.actor;
  j["kind"] = kind_name(event);
  j["payload"] =
      std::visit([](const auto& body) { return payload_json(body); },
                 event.body);
  return j;
}

Event event_from_json(const Json& j) {
  Event event;
  event.tick = j.at("tick").get<Tick>();
  event.actor = j.at("actor").get<std::string>();
  event.body = body_from_json(j.at("kind").get<std::string>(),
                              j.at("payload"));
  return event;
}

Json log_to_json(const WorldLog& log) {
  Json j = Json::array();
  for (const Event& event : log) {
    j.push_back(event_to_json(event));
  }
  return j;
}

WorldLog log_from_json(const Json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("world log JSON must be an array of events");
  }
  WorldLog log;
  log.reserve(j.size());
  for (const Json& item : j) {
    log.push_back(event_from_json(item));
  }
  return log;
}

WorldLog load_log_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open log file: " + path);
  }
  Json j = Json::parse(in);
  return log_from_json(j);
}

}  // namespace tetra::spacetime
