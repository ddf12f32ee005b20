#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace tetra {

// Each particle carries one of four values.
inline constexpr int kParticleValues = 4;

// Explicit validation caps state-space size at 4^8 = 65536.
inline constexpr std::size_t kMaxParticles = 8;

constexpr bool is_particle_value(int value) {
  return value >= 0 && value < kParticleValues;
}

// A single particle's value, validated on construction.
class ParticleState {
 public:
  explicit ParticleState(int value);
  int value() const { return value_; }

  auto operator<=>(const ParticleState&) const = default;

 private:
  int value_;
};

// The full (ontic) configuration of a system: one value per particle.
// Agent-facing code never reads these values directly; it sees measurement
// outcomes and mixtures. Tests and flagged outputs use the god view.
class SystemState {
 public:
  explicit SystemState(const std::vector<int>& values);
  SystemState(std::initializer_list<int> values);

  std::size_t particle_count() const { return values_.size(); }
  int value(std::size_t particle) const { return values_[particle]; }
  const std::vector<std::uint8_t>& values() const { return values_; }

  // Base-4 code with particle 0 as the least significant digit.
  std::size_t encode() const;
  static SystemState decode(std::size_t code, std::size_t particle_count);

  auto operator<=>(const SystemState&) const = default;

 private:
  SystemState() = default;
  std::vector<std::uint8_t> values_;
};

// 4^particle_count, the number of distinct states.
std::size_t state_space_size(std::size_t particle_count);

}  // namespace tetra
