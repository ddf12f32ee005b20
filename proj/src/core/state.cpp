#include "tetra/core/state.hpp"

#include <stdexcept>
#include <string>

namespace tetra {

ParticleState::ParticleState(int value) : value_(value) {
  if (!is_particle_value(value)) {
    throw std::invalid_argument("particle value out of range: " +
                                std::to_string(value));
  }
}

SystemState::SystemState(const std::vector<int>& values) {
  if (values.empty()) {
    throw std::invalid_argument("a system has at least one particle");
  }
  if (values.size() > kMaxParticles) {
    throw std::invalid_argument("too many particles (max " +
                                std::to_string(kMaxParticles) + ")");
  }
  values_.reserve(values.size());
  for (int v : values) {
    if (!is_particle_value(v)) {
      throw std::invalid_argument("particle value out of range: " +
                                  std::to_string(v));
    }
    values_.push_back(static_cast<std::uint8_t>(v));
  }
}

SystemState::SystemState(std::initializer_list<int> values)
    : SystemState(std::vector<int>(values)) {}

std::size_t SystemState::encode() const {
  std::size_t code = 0;
  for (std::size_t i = values_.size(); i-- > 0;) {
    code = code * kParticleValues + values_[i];
  }
  return code;
}

SystemState SystemState::decode(std::size_t code, std::size_t particle_count) {
  if (particle_count == 0 || particle_count > kMaxParticles) {
    throw std::invalid_argument("bad particle count");
  }
  if (code >= state_space_size(particle_count)) {
    throw std::out_of_range("state code out of range");
  }
  SystemState state;
  state.values_.resize(particle_count);
  for (std::size_t i = 0; i < particle_count; ++i) {
    state.values_[i] = static_cast<std::uint8_t>(code % kParticleValues);
    code /= kParticleValues;
  }
  return state;
}

std::size_t state_space_size(std::size_t particle_count) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < particle_count; ++i) {
    size *= kParticleValues;
  }
  return size;
}

}  // namespace tetra
