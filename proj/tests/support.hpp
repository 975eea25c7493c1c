#pragma once

// Brute-force oracles and sequence checks shared by the unit and
// acceptance suites. Nothing here calls the closed forms under test.

#include <cmath>
#include <cstdint>
#include <vector>

namespace testsupport {

inline constexpr double kTieTolerance = 1e-12;

/// Smallest n in [0, n_max] whose payoff is within kTieTolerance of the best.
inline std::int64_t brute_prompt_count(double u, double p, double eps, std::int64_t n_max = 200) {
  double best = -1e300;
  std::vector<double> pay;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    pay.push_back((1.0 - std::pow(eps, double(n))) * u - double(n) * p);
    best = std::max(best, pay.back());
  }
  for (std::int64_t n = 0; n <= n_max; ++n) {
    if (pay[n] >= best - kTieTolerance) return n;
  }
  return n_max;
}

inline double brute_user_payoff(double u, double p, double eps) {
  const auto n = brute_prompt_count(u, p, eps);
  return (1.0 - std::pow(eps, double(n))) * u - double(n) * p;
}

struct GridMax {
  double price;
  double payoff;
};

/// Homogeneous platform optimum over p = step, 2 step, ..., U.
inline GridMax homogeneous_grid_max(double u, double c, double eps, double step = 1e-4) {
  GridMax best{0.0, 0.0};
  const auto steps = static_cast<std::int64_t>(std::llround(u / step));
  for (std::int64_t j = 1; j <= steps; ++j) {
    const double p = double(j) * step;
    const double v = (p - c) * double(brute_prompt_count(u, p, eps));
    if (v > best.payoff) best = {p, v};
  }
  return best;
}

/// Rises (weakly) then falls (weakly); a constant sequence qualifies.
template <class T>
bool is_unimodal(const std::vector<T>& xs) {
  std::size_t i = 1;
  while (i < xs.size() && xs[i] >= xs[i - 1]) ++i;
  while (i < xs.size() && xs[i] <= xs[i - 1]) ++i;
  return i >= xs.size();
}

template <class T>
bool is_non_increasing(const std::vector<T>& xs, T slack = T{}) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] > xs[i - 1] + slack) return false;
  }
  return true;
}

template <class T>
bool is_non_decreasing(const std::vector<T>& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] < xs[i - 1]) return false;
  }
  return true;
}

}  // namespace testsupport
