#pragma once

// User side of the pricing game: a user with ambiguity eps picks a model and
// a number of prompts to maximise (1 - eps^n) U - n p.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "promptpricing/core.hpp"

namespace promptpricing {

/// Optimal prompt number; unbounded only at a zero price.
class PromptCount {
 public:
  constexpr explicit PromptCount(std::int64_t n) : value_(n) {}
  static constexpr PromptCount unbounded() { return PromptCount(kUnbounded); }

  constexpr bool is_unbounded() const noexcept { return value_ == kUnbounded; }
  /// Finite count. Must not be called on an unbounded count.
  constexpr std::int64_t value() const noexcept { return value_; }

  friend constexpr bool operator==(PromptCount, PromptCount) = default;

 private:
  static constexpr std::int64_t kUnbounded = -1;
  std::int64_t value_;
};

struct UserDecision {
  std::optional<std::string> selected_model;  // nullopt: no purchase
  PromptCount prompt_count{0};
  double payoff = 0.0;
};

enum class PromptShape { AlwaysInfinite, InverseUShaped, Decreasing, AlwaysZero };

std::string_view to_string(PromptShape shape) noexcept;

PromptCount optimal_prompt_count(const GaiModel& model, double price, Ambiguity eps);

double user_payoff(const GaiModel& model, double price, Ambiguity eps, std::int64_t n);

UserDecision select_model(const ModelSet& models, const PriceSchedule& prices, Ambiguity eps);

double optimal_user_payoff(const ModelSet& models, const PriceSchedule& prices, Ambiguity eps);

/// Largest prompt count any ambiguity can induce at this price.
std::int64_t prompt_upper_bound(const GaiModel& model, double price);

PromptShape classify_prompt_shape(const GaiModel& model, double price);

namespace detail {

/// Distance from an integer below which log_eps(.) is treated as sitting on a
/// tie between two prompt counts.
inline constexpr double kFloorSnap = 1e-9;

/// Closed-form optimal count for a positive price. The logarithms are
/// passed in so the per-node kernels can cache them and still reproduce
/// optimal_prompt_count bit for bit.
///   log_price_ratio = ln(price / utility)
///   log_odds        = ln(eps / (1 - eps))
///   log_eps         = ln(eps)
/// At a tie between k-1 and k prompts the smaller count is returned.
inline std::int64_t finite_prompt_count(double price, double utility, double one_minus_eps,
                                        double log_price_ratio, double log_odds, double log_eps) {
  if (price > one_minus_eps * utility) return 0;
  const double x = (log_price_ratio + log_odds) / log_eps;
  const double nearest = std::nearbyint(x);
  if (std::abs(x - nearest) < kFloorSnap) {
    return std::max<std::int64_t>(0, static_cast<std::int64_t>(nearest) - 1);
  }
  return static_cast<std::int64_t>(std::floor(x));
}

/// Model-selection order: higher payoff, then higher utility, then lower id.
/// Payoffs within kThresholdTolerance count as equal.
inline bool preferred_over(double payoff, double utility, const std::string& id,
                           double best_payoff, double best_utility, const std::string& best_id) {
  if (payoff > best_payoff + kThresholdTolerance) return true;
  if (payoff < best_payoff - kThresholdTolerance) return false;
  if (utility != best_utility) return utility > best_utility;
  return id < best_id;
}

}  // namespace detail
}  // namespace promptpricing
