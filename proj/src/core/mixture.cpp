#include "tetra/core/mixture.hpp"

#include <algorithm>
#include <stdexcept>

namespace tetra {

Mixture::Mixture(std::vector<std::pair<SystemState, Rational>> support)
    : support_(std::move(support)) {
  if (support_.empty()) {
    throw std::invalid_argument("empty mixture");
  }
  const std::size_t width = support_.front().first.particle_count();
  std::sort(support_.begin(), support_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Rational total;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    const auto& [state, p] = support_[i];
    if (state.particle_count() != width) {
      throw std::invalid_argument("mixture mixes particle counts");
    }
    if (!(p > Rational(0, 1))) {
      throw std::invalid_argument("mixture probabilities must be positive");
    }
    if (i > 0 && state == support_[i - 1].first) {
      throw std::invalid_argument("mixture support entries must be distinct");
    }
    total += p;
  }
  if (total != Rational(1, 1)) {
    throw std::invalid_argument("mixture probabilities must sum to 1, got " +
                                total.to_string());
  }
}

Mixture Mixture::uniform_over(const std::vector<SystemState>& states) {
  if (states.empty()) {
    throw std::invalid_argument("empty mixture");
  }
  const Rational p(1, static_cast<std::int64_t>(states.size()));
  std::vector<std::pair<SystemState, Rational>> support;
  support.reserve(states.size());
  for (const auto& state : states) {
    support.emplace_back(state, p);
  }
  return Mixture(std::move(support));
}

Mixture Mixture::point(const SystemState& state) {
  return Mixture({{state, Rational(1, 1)}});
}

Rational Mixture::probability_of(const SystemState& state) const {
  for (const auto& [s, p] : support_) {
    if (s == state) return p;
  }
  return Rational(0, 1);
}

std::array<Rational, kParticleValues> Mixture::marginal(
    std::size_t particle) const {
  if (particle >= particle_count()) {
    throw std::out_of_range("particle index out of range");
  }
  std::array<Rational, kParticleValues> out{};
  for (const auto& [state, p] : support_) {
    out[state.value(particle)] += p;
  }
  return out;
}

Mixture posterior_mixture(const Measurement& m, int outcome) {
  if (outcome < 0 ||
      static_cast<std::size_t>(outcome) >= m.outcome_sets.size()) {
    throw std::out_of_range("outcome index out of range");
  }
  return Mixture::uniform_over(m.outcome_sets[outcome].rows);
}

Mixture retrodict(const Mixture& prior, const Measurement& m, int outcome) {
  if (outcome < 0 ||
      static_cast<std::size_t>(outcome) >= m.outcome_sets.size()) {
    throw std::out_of_range("outcome index out of range");
  }
  const auto& rows = m.outcome_sets[outcome].rows;
  std::vector<std::pair<SystemState, Rational>> kept;
  Rational total;
  for (const auto& [state, p] : prior.support()) {
    if (std::find(rows.begin(), rows.end(), state) != rows.end()) {
      kept.emplace_back(state, p);
      total += p;
    }
  }
  if (kept.empty()) {
    throw std::domain_error("outcome impossible under prior");
  }
  for (auto& [state, p] : kept) {
    p /= total;
  }
  return Mixture(std::move(kept));
}

}  // namespace tetra
