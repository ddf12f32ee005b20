#include "tetra/bell/bell.hpp"

#include <utility>
#include <vector>

#include "tetra/core/enumerate.hpp"

namespace tetra::bell {

Measurement bell_measurement() {
  std::vector<std::vector<std::vector<int>>> sets;
  sets.reserve(4);
  for (int r = 0; r < 4; ++r) {
    std::vector<std::vector<int>> rows;
    rows.reserve(4);
    for (int a = 0; a < 4; ++a) {
      rows.push_back({a, (a - r + 4) % 4});
    }
    sets.push_back(std::move(rows));
  }
  return Measurement::from_rows(2, sets);
}

BellPairRecord prepare_pair(spacetime::World& world, spacetime::Coord source,
                            Rng& rng, const std::string& actor) {
  BellPairRecord record;
  record.first = world.spawn(static_cast<int>(rng.below(4)), source, actor);
  record.second = world.spawn(static_cast<int>(rng.below(4)), source, actor);
  record.pair_outcome = world.measure(
      bell_measurement(), {record.first, record.second}, rng, actor);
  record.ontic_y = world.god_value(record.first);
  return record;
}

BellPairRecord normalize_pair(spacetime::World& world,
                              const BellPairRecord& record,
                              const std::string& actor) {
  world.apply_map(record.second, rotation(record.pair_outcome), actor);
  BellPairRecord out = record;
  out.pair_outcome = 0;
  return out;
}

Measurement random_pair_measurement(Rng& rng) {
  Measurement base;
  if (rng.below(2) == 0) {
    const std::vector<Measurement> singles = enumerate_valid_measurements(1);
    const Measurement& left = singles[rng.below(4)];
    const Measurement& right = singles[rng.below(4)];
    base.num_particles = 2;
    for (const OutcomeSet& a : left.outcome_sets) {
      for (const OutcomeSet& b : right.outcome_sets) {
        OutcomeSet product;
        product.label = static_cast<int>(base.outcome_sets.size());
        for (const SystemState& x : a.rows) {
          for (const SystemState& y : b.rows) {
            product.rows.push_back(SystemState{x.value(0), y.value(0)});
          }
        }
        base.outcome_sets.push_back(std::move(product));
      }
    }
  } else {
    base = bell_measurement();
  }

  const Bijection g0 = random_bijection(rng);
  const Bijection g1 = random_bijection(rng);
  for (OutcomeSet& set : base.outcome_sets) {
    for (SystemState& row : set.rows) {
      row = SystemState{g0(row.value(0)), g1(row.value(1))};
    }
  }
  for (std::uint32_t i =
           static_cast<std::uint32_t>(base.outcome_sets.size()) - 1;
       i > 0; --i) {
    std::swap(base.outcome_sets[i], base.outcome_sets[rng.below(i + 1)]);
  }
  for (std::size_t i = 0; i < base.outcome_sets.size(); ++i) {
    base.outcome_sets[i].label = static_cast<int>(i);
  }
  return base;
}

}  // namespace tetra::bell
