#pragma once

// Closed-form platform pricing when every user shares one ambiguity eps.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "promptpricing/core.hpp"
#include "promptpricing/user_strategy.hpp"

namespace promptpricing {

/// Scan limit for sigma. Only reachable for eps extremely close to one.
inline constexpr std::int64_t kDefaultSigmaCap = 10'000;

/// Prompt count the platform induces at its optimal homogeneous price:
/// the first k >= 0 with (k+1) eps^k - k eps^(k-1) < C / ((1 - eps) U).
std::int64_t sigma(const GaiModel& model, Ambiguity eps, std::int64_t cap = kDefaultSigmaCap);

/// Price eps^(sigma-1) (1 - eps) U that makes sigma prompts optimal.
double homogeneous_price(const GaiModel& model, Ambiguity eps, std::int64_t sigma_value);

struct HomogeneousSolution {
  PriceSchedule schedule;
  std::string best_model;                   // argmax model m*
  std::optional<std::string> served_model;  // m*, or nullopt when sigma = 0
  std::int64_t sigma = 0;
  double platform_payoff = 0.0;
  /// m* is free to run, so the induced count grows without bound as eps -> 1.
  bool cost_free_unbounded = false;
  bool sigma_capped = false;
};

HomogeneousSolution optimal_homogeneous_price(const ModelSet& models, Ambiguity eps,
                                              std::int64_t sigma_cap = kDefaultSigmaCap);

/// The user is indifferent between sigma-1 and sigma prompts exactly at the
/// optimal price, so the platform's payoff there is a supremum. This is
/// the count chosen just below the price, which is what the platform earns
/// in the limit.
std::int64_t induced_prompt_count(const GaiModel& model, double price, Ambiguity eps);

enum class CostShape { Increasing, InverseUShaped, Decreasing, AlwaysZero };

std::string_view to_string(CostShape shape) noexcept;

CostShape classify_cost_shape(const GaiModel& model);

struct HomogeneousPoint {
  double eps;
  std::string model;
  bool served;
  double price;
  std::int64_t sigma;
  std::int64_t prompt_count;
  double platform_payoff;
};

/// One row per grid point; the grid must be strictly ascending inside (0, 1).
std::vector<HomogeneousPoint> homogeneous_payoff_curve(const ModelSet& models,
                                                       std::span<const double> eps_grid);

}  // namespace promptpricing
