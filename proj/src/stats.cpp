#include "tetra/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace tetra {

namespace {

// Upper 0.001 quantiles of the chi-square distribution, dof 1..15.
constexpr double kCritical001[15] = {
    10.828, 13.816, 16.266, 18.467, 20.515, 22.458, 24.322, 26.124,
    27.877, 29.588, 31.264, 32.909, 34.528, 36.123, 37.697};

}  // namespace

ChiSquareResult chi_square_uniform(std::span<const long long> counts) {
  if (counts.size() < 2) {
    throw std::invalid_argument("chi-square needs at least two cells");
  }
  const int dof = static_cast<int>(counts.size()) - 1;
  if (dof > 15) {
    throw std::invalid_argument("chi-square table covers dof <= 15");
  }
  long long total = 0;
  for (long long c : counts) {
    if (c < 0) throw std::invalid_argument("negative count");
    total += c;
  }
  if (total == 0) {
    throw std::invalid_argument("chi-square on empty sample");
  }
  const double expected = static_cast<double>(total) / counts.size();
  double stat = 0.0;
  for (long long c : counts) {
    const double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  ChiSquareResult result;
  result.statistic = stat;
  result.dof = dof;
  result.critical = kCritical001[dof - 1];
  result.pass = stat <= result.critical;
  return result;
}

bool binomial_consistent(long long successes, long long trials, double p,
                         double z) {
  if (trials <= 0 || successes < 0 || successes > trials) {
    throw std::invalid_argument("bad binomial sample");
  }
  const double n = static_cast<double>(trials);
  const double observed = static_cast<double>(successes) / n;
  const double sigma = std::sqrt(p * (1.0 - p) / n);
  // Degenerate p in {0, 1}: the observation must match exactly.
  if (sigma == 0.0) {
    return observed == p;
  }
  return std::abs(observed - p) <= z * sigma;
}

}  // namespace tetra
