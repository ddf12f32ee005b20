#include "tetra/cloning/certificate.hpp"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tetra::cloning {

Rational failure_certificate(const OutcomeSet& c,
                             std::pair<int, int> designated_columns,
                             int target_value) {
  const ValidityReport report = validate_outcome_set(c.rows);
  if (!report.ok) {
    throw std::invalid_argument("invalid outcome set: " + report.message);
  }
  const int width = static_cast<int>(c.rows.front().particle_count());
  const auto [n1, n2] = designated_columns;
  if (n1 < 0 || n1 >= width || n2 < 0 || n2 >= width) {
    throw std::invalid_argument("designated column out of range");
  }
  if (n1 == n2) {
    throw std::invalid_argument("designated columns must be distinct");
  }
  if (!is_particle_value(target_value)) {
    throw std::invalid_argument("target value must be in 0..3");
  }
  std::int64_t differing = 0;
  for (const SystemState& row : c.rows) {
    if (row.value(n1) != target_value || row.value(n2) != target_value) {
      ++differing;
    }
  }
  return Rational(differing, static_cast<std::int64_t>(c.rows.size()));
}

namespace {

// A size-2..4 subset of the values; for one particle, rows distinct means
// values distinct, so any such subset is a valid outcome set.
OutcomeSet sample_subset_set(Rng& rng) {
  const Bijection order = random_bijection(rng);
  const int size = 2 + static_cast<int>(rng.below(3));
  std::vector<SystemState> rows;
  for (int i = 0; i < size; ++i) {
    rows.push_back(SystemState{order(i)});
  }
  return OutcomeSet{0, std::move(rows)};
}

// Four rows (g_1(a), ..., g_n(a)): each column shows every value once.
OutcomeSet sample_one_of_each_set(int num_particles, Rng& rng) {
  std::vector<Bijection> column(num_particles, Bijection::identity());
  for (Bijection& g : column) g = random_bijection(rng);
  std::vector<SystemState> rows;
  for (int a = 0; a < 4; ++a) {
    std::vector<int> values(num_particles);
    for (int i = 0; i < num_particles; ++i) values[i] = column[i](a);
    rows.push_back(SystemState(values));
  }
  return OutcomeSet{0, std::move(rows)};
}

// Two stacked layers; the second layer reads the row index through an
// extra rotation on column 1 (and arbitrary bijections elsewhere), so no
// second-layer row can agree with a first-layer row in both of the first
// two columns. Each column shows every value exactly twice.
OutcomeSet sample_stacked_set(int num_particles, Rng& rng) {
  std::vector<Bijection> column(num_particles, Bijection::identity());
  for (Bijection& g : column) g = random_bijection(rng);
  std::vector<Bijection> second = column;
  const Bijection offset = rotation(1 + static_cast<int>(rng.below(3)));
  second[1] = offset.then(column[1]);
  for (int i = 2; i < num_particles; ++i) {
    second[i] = random_bijection(rng).then(column[i]);
  }
  std::vector<SystemState> rows;
  for (int a = 0; a < 4; ++a) {
    std::vector<int> values(num_particles);
    for (int i = 0; i < num_particles; ++i) values[i] = column[i](a);
    rows.push_back(SystemState(values));
  }
  for (int a = 0; a < 4; ++a) {
    std::vector<int> values(num_particles);
    for (int i = 0; i < num_particles; ++i) values[i] = second[i](a);
    rows.push_back(SystemState(values));
  }
  return OutcomeSet{0, std::move(rows)};
}

// Five rows with per-column value counts 2 and 3 (the smallest row count
// where the quarter rule bites without forcing equal counts); needs at
// least three columns, since five distinct rows cannot fit in the 2x2
// grid that two 2-valued columns allow.
OutcomeSet sample_five_row_set(int num_particles, Rng& rng) {
  static constexpr std::array<std::array<int, 5>, 3> kTemplate = {{
      {0, 0, 1, 1, 0},
      {0, 1, 0, 1, 0},
      {0, 1, 1, 0, 1},
  }};
  std::vector<std::array<int, 5>> columns;
  for (int i = 0; i < num_particles; ++i) {
    std::array<int, 5> pattern =
        i < 3 ? kTemplate[i] : kTemplate[rng.below(3)];
    const Bijection relabel = random_bijection(rng);
    for (int& v : pattern) v = relabel(v);
    columns.push_back(pattern);
  }
  std::vector<SystemState> rows;
  for (int a = 0; a < 5; ++a) {
    std::vector<int> values(num_particles);
    for (int i = 0; i < num_particles; ++i) values[i] = columns[i][a];
    rows.push_back(SystemState(values));
  }
  for (std::uint32_t i = 4; i > 0; --i) {
    std::swap(rows[i], rows[rng.below(i + 1)]);
  }
  return OutcomeSet{0, std::move(rows)};
}

}  // namespace

OutcomeSet sample_valid_outcome_set(int num_particles, Rng& rng) {
  if (num_particles < 1 ||
      num_particles > static_cast<int>(kMaxParticles)) {
    throw std::invalid_argument("particle count out of range");
  }
  OutcomeSet sample;
  if (num_particles == 1) {
    sample = rng.below(2) == 0 ? sample_subset_set(rng)
                               : sample_one_of_each_set(1, rng);
  } else {
    const std::uint32_t families = num_particles >= 3 ? 3 : 2;
    switch (rng.below(families)) {
      case 0:
        sample = sample_one_of_each_set(num_particles, rng);
        break;
      case 1:
        sample = sample_stacked_set(num_particles, rng);
        break;
      default:
        sample = sample_five_row_set(num_particles, rng);
        break;
    }
  }
  const ValidityReport report = validate_outcome_set(sample.rows);
  if (!report.ok) {
    throw std::logic_error("sampler produced an invalid outcome set: " +
                           report.message);
  }
  return sample;
}

}  // namespace tetra::cloning
