#include "promptpricing/user_strategy.hpp"

#include <sstream>

namespace promptpricing {

std::string_view to_string(PromptShape shape) noexcept {
  switch (shape) {
    case PromptShape::AlwaysInfinite: return "always_infinite";
    case PromptShape::InverseUShaped: return "inverse_u";
    case PromptShape::Decreasing: return "decreasing";
    case PromptShape::AlwaysZero: return "always_zero";
  }
  return "unknown";
}

namespace {

void require_non_negative(double price) {
  if (!std::isfinite(price) || price < 0.0) {
    std::ostringstream msg;
    msg << "price must be finite and >= 0, got " << price;
    throw Error(ErrorCode::InvalidPrice, msg.str());
  }
}

}  // namespace

PromptCount optimal_prompt_count(const GaiModel& model, double price, Ambiguity eps) {
  require_non_negative(price);
  if (price == 0.0) return PromptCount::unbounded();
  const double e = eps.value();
  return PromptCount(detail::finite_prompt_count(price, model.utility(), 1.0 - e,
                                                 std::log(price / model.utility()),
                                                 std::log(e / (1.0 - e)), std::log(e)));
}

double user_payoff(const GaiModel& model, double price, Ambiguity eps, std::int64_t n) {
  const double nd = static_cast<double>(n);
  return (1.0 - std::pow(eps.value(), nd)) * model.utility() - nd * price;
}

UserDecision select_model(const ModelSet& models, const PriceSchedule& prices, Ambiguity eps) {
  const std::vector<double> p = prices.aligned_to(models);
  UserDecision best;
  const GaiModel* best_model = nullptr;
  for (std::size_t i = 0; i < models.size(); ++i) {
    const GaiModel& m = models[i];
    const PromptCount n = optimal_prompt_count(m, p[i], eps);
    if (!n.is_unbounded() && n.value() == 0) continue;
    // A free model's payoff tends to U as the prompt count grows.
    const double payoff = n.is_unbounded() ? m.utility() : user_payoff(m, p[i], eps, n.value());
    if (best_model == nullptr ||
        detail::preferred_over(payoff, m.utility(), m.id(), best.payoff, best_model->utility(),
                               best_model->id())) {
      best_model = &m;
      best = {m.id(), n, payoff};
    }
  }
  return best;
}

double optimal_user_payoff(const ModelSet& models, const PriceSchedule& prices, Ambiguity eps) {
  return select_model(models, prices, eps).payoff;
}

std::int64_t prompt_upper_bound(const GaiModel& model, double price) {
  if (!std::isfinite(price) || price <= 0.0) {
    throw Error(ErrorCode::InvalidPrice, "prompt upper bound needs a positive price");
  }
  const double ratio = price / model.utility();
  // k^k / (k+1)^(k+1) written as (k/(k+1))^k / (k+1) to stay finite.
  for (std::int64_t k = 1;; ++k) {
    const double kd = static_cast<double>(k);
    const double peak = std::pow(kd / (kd + 1.0), kd) / (kd + 1.0);
    if (peak < ratio) return k;
  }
}

PromptShape classify_prompt_shape(const GaiModel& model, double price) {
  require_non_negative(price);
  const double u = model.utility();
  if (price == 0.0) return PromptShape::AlwaysInfinite;
  if (price <= u / 4.0) return PromptShape::InverseUShaped;
  if (price < u) return PromptShape::Decreasing;
  return PromptShape::AlwaysZero;
}

}  // namespace promptpricing
