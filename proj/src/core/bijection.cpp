#include "tetra/core/bijection.hpp"

#include <stdexcept>
#include <utility>

#include "tetra/core/state.hpp"
#include "tetra/rng.hpp"

namespace tetra {

Bijection::Bijection(const std::array<int, 4>& table) {
  std::array<bool, 4> seen{};
  for (std::size_t i = 0; i < table.size(); ++i) {
    int v = table[i];
    if (!is_particle_value(v) || seen[v]) {
      throw std::invalid_argument("table is not a bijection on {0,1,2,3}");
    }
    seen[v] = true;
    table_[i] = static_cast<std::uint8_t>(v);
  }
}

Bijection Bijection::identity() {
  Bijection b;
  for (std::size_t i = 0; i < 4; ++i) {
    b.table_[i] = static_cast<std::uint8_t>(i);
  }
  return b;
}

int Bijection::operator()(int value) const {
  if (!is_particle_value(value)) {
    throw std::invalid_argument("value out of range");
  }
  return table_[value];
}

Bijection Bijection::then(const Bijection& b) const {
  Bijection out;
  for (std::size_t i = 0; i < 4; ++i) {
    out.table_[i] = b.table_[table_[i]];
  }
  return out;
}

Bijection Bijection::inverse() const {
  Bijection out;
  for (std::size_t i = 0; i < 4; ++i) {
    out.table_[table_[i]] = static_cast<std::uint8_t>(i);
  }
  return out;
}

Bijection rotation(int k) {
  if (k < 0 || k >= kParticleValues) {
    throw std::invalid_argument("rotation index must be in 0..3");
  }
  std::array<int, 4> table{};
  for (int x = 0; x < kParticleValues; ++x) {
    table[x] = (x + k) % kParticleValues;
  }
  return Bijection(table);
}

Bijection random_bijection(Rng& rng) {
  std::array<int, 4> table = {0, 1, 2, 3};
  for (std::uint32_t i = 3; i > 0; --i) {
    std::swap(table[i], table[rng.below(i + 1)]);
  }
  return Bijection(table);
}

}  // namespace tetra
