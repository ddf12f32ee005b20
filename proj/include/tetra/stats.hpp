#pragma once

#include <span>

namespace tetra {

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double critical = 0.0;  // at significance 0.001
  bool pass = false;      // statistic <= critical
};

// Pearson chi-square test of `counts` against the uniform distribution,
// at fixed significance 0.001. Supports dof 1..15.
ChiSquareResult chi_square_uniform(std::span<const long long> counts);

// Two-sided binomial check via the normal approximation: is `successes`
// out of `trials` consistent with success probability `p` at the given
// z quantile (2.5758 = 99% confidence)?
bool binomial_consistent(long long successes, long long trials, double p,
                         double z = 2.5758);

}  // namespace tetra
