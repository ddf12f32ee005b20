#include "tetra/core/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace tetra {

Json measurement_to_json(const Measurement& m) {
  Json outcomes = Json::array();
  for (const auto& set : m.outcome_sets) {
    Json rows = Json::array();
    for (const auto& row : set.rows) {
      Json values = Json::array();
      for (std::size_t n = 0; n < row.particle_count(); ++n) {
        values.push_back(row.value(n));
      }
      rows.push_back(std::move(values));
    }
    outcomes.push_back(std::move(rows));
  }
  Json j;
  j["num_particles"] = m.num_particles;
  j["outcomes"] = std::move(outcomes);
  return j;
}

Measurement measurement_from_json(const Json& j) {
  const std::size_t num_particles = j.at("num_particles").get<std::size_t>();
  std::vector<std::vector<std::vector<int>>> outcome_rows;
  for (const auto& rows : j.at("outcomes")) {
    std::vector<std::vector<int>> set;
    for (const auto& row : rows) {
      set.push_back(row.get<std::vector<int>>());
    }
    outcome_rows.push_back(std::move(set));
  }
  return Measurement::from_rows(num_particles, outcome_rows);
}

Json mixture_to_json(const Mixture& mixture) {
  Json j = Json::array();
  for (const auto& [state, p] : mixture.support()) {
    Json entry;
    Json values = Json::array();
    for (std::size_t n = 0; n < state.particle_count(); ++n) {
      values.push_back(state.value(n));
    }
    entry["state"] = std::move(values);
    entry["p"] = p.to_string();
    j.push_back(std::move(entry));
  }
  return j;
}

Mixture mixture_from_json(const Json& j) {
  std::vector<std::pair<SystemState, Rational>> support;
  for (const auto& entry : j) {
    SystemState state(entry.at("state").get<std::vector<int>>());
    Rational p = Rational::parse(entry.at("p").get<std::string>());
    support.emplace_back(std::move(state), p);
  }
  return Mixture(std::move(support));
}

Measurement load_measurement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  return measurement_from_json(Json::parse(in));
}

}  // namespace tetra
