#pragma once

#include <array>
#include <compare>
#include <cstdint>

namespace tetra {

// A one-to-one map on the four particle values. These are the only
// single-particle manipulations the theory allows: they relabel values
// without reading them.
class Bijection {
 public:
  explicit Bijection(const std::array<int, 4>& table);

  static Bijection identity();

  int operator()(int value) const;
  const std::array<std::uint8_t, 4>& table() const { return table_; }

  // (a then b), i.e. x -> b(a(x)).
  Bijection then(const Bijection& b) const;
  Bijection inverse() const;

  auto operator<=>(const Bijection&) const = default;

 private:
  Bijection() = default;
  std::array<std::uint8_t, 4> table_{};
};

// The rotation x -> (x + k) mod 4. rotation(0) is the identity and
// rotation(a).then(rotation(b)) == rotation((a + b) mod 4).
Bijection rotation(int k);

class Rng;

// Uniformly random permutation of the four values.
Bijection random_bijection(Rng& rng);

}  // namespace tetra
