#pragma once

#include <cstdint>
#include <limits>

namespace tetra {

// SplitMix64: the repository's single random source. It is seedable,
// portable (the sequence is fixed by this file, not by the standard
// library), and splittable: derive(k) yields an independent stream for
// trial k of a batch, so batch results do not depend on execution order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  // Uniform draw from {0, ..., bound-1}, unbiased via rejection.
  std::uint32_t below(std::uint32_t bound) {
    const std::uint64_t min = (0 - static_cast<std::uint64_t>(bound)) %
                              static_cast<std::uint64_t>(bound);
    for (;;) {
      std::uint64_t v = next();
      if (v >= min) {
        return static_cast<std::uint32_t>(v % bound);
      }
    }
  }

  // Counter-based split keyed on the original seed, independent of how
  // much of this stream has been consumed.
  Rng derive(std::uint64_t stream) const {
    std::uint64_t s = mix(seed_ + 0x9e3779b97f4a7c15ull * (stream + 1));
    return Rng(mix(s ^ 0xd1b54a32d192ed03ull));
  }

  std::uint64_t seed() const { return seed_; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace tetra
