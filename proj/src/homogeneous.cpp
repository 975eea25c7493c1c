#include "promptpricing/homogeneous.hpp"

#include <algorithm>
#include <cmath>

namespace promptpricing {

std::string_view to_string(CostShape shape) noexcept {
  switch (shape) {
    case CostShape::Increasing: return "increasing";
    case CostShape::InverseUShaped: return "inverse_u";
    case CostShape::Decreasing: return "decreasing";
    case CostShape::AlwaysZero: return "always_zero";
  }
  return "unknown";
}

std::int64_t sigma(const GaiModel& model, Ambiguity eps, std::int64_t cap) {
  const double e = eps.value();
  const double threshold = model.cost() / ((1.0 - e) * model.utility()) - kThresholdTolerance;
  if (1.0 < threshold) return 0;
  for (std::int64_t k = 1; k < cap; ++k) {
    const double kd = static_cast<double>(k);
    const double marginal = std::pow(e, kd - 1.0) * ((kd + 1.0) * e - kd);
    if (marginal < threshold) return k;
  }
  return cap;
}

double homogeneous_price(const GaiModel& model, Ambiguity eps, std::int64_t sigma_value) {
  const double e = eps.value();
  return std::pow(e, static_cast<double>(sigma_value) - 1.0) * (1.0 - e) * model.utility();
}

HomogeneousSolution optimal_homogeneous_price(const ModelSet& models, Ambiguity eps,
                                              std::int64_t sigma_cap) {
  const GaiModel* best = nullptr;
  std::int64_t best_sigma = 0;
  double best_price = 0.0;
  double best_payoff = 0.0;
  for (const auto& m : models) {
    const std::int64_t s = sigma(m, eps, sigma_cap);
    const double price = homogeneous_price(m, eps, s);
    const double payoff = s == 0 ? 0.0 : std::max(0.0, (price - m.cost()) * static_cast<double>(s));
    if (best == nullptr || detail::preferred_over(payoff, m.utility(), m.id(), best_payoff,
                                                  best->utility(), best->id())) {
      best = &m;
      best_sigma = s;
      best_price = price;
      best_payoff = payoff;
    }
  }

  HomogeneousSolution out;
  for (const auto& m : models) out.schedule.set(m.id(), m.utility());
  out.schedule.set(best->id(), best_sigma > 0 ? best_price : best->utility());
  out.best_model = best->id();
  out.sigma = best_sigma;
  out.sigma_capped = best_sigma >= sigma_cap;
  if (best_sigma > 0) {
    out.served_model = best->id();
    out.platform_payoff = best_payoff;
    out.cost_free_unbounded = best->cost() == 0.0;
  }
  return out;
}

std::int64_t induced_prompt_count(const GaiModel& model, double price, Ambiguity eps) {
  // Relative offset: large enough to clear the tie snap for any eps, small
  // enough never to reach the next boundary (a factor eps away).
  const PromptCount n = optimal_prompt_count(model, price * (1.0 - 1e-7), eps);
  return n.is_unbounded() ? 0 : n.value();
}

CostShape classify_cost_shape(const GaiModel& model) {
  const double c = model.cost();
  const double u = model.utility();
  if (c == 0.0) return CostShape::Increasing;
  if (c <= u / 8.0) return CostShape::InverseUShaped;
  if (c < u) return CostShape::Decreasing;
  return CostShape::AlwaysZero;
}

std::vector<HomogeneousPoint> homogeneous_payoff_curve(const ModelSet& models,
                                                       std::span<const double> eps_grid) {
  for (std::size_t i = 1; i < eps_grid.size(); ++i) {
    if (!(eps_grid[i] > eps_grid[i - 1])) {
      throw Error(ErrorCode::ConfigError, "ambiguity grid must be strictly ascending");
    }
  }
  std::vector<HomogeneousPoint> rows;
  rows.reserve(eps_grid.size());
  for (const double e : eps_grid) {
    const Ambiguity eps(e);
    const HomogeneousSolution sol = optimal_homogeneous_price(models, eps);
    const GaiModel& m = models[*models.index_of(sol.best_model)];
    const double price = sol.schedule.price_of(sol.best_model);
    const std::int64_t count = sol.served_model ? induced_prompt_count(m, price, eps) : 0;
    rows.push_back({e, sol.best_model, sol.served_model.has_value(), price, sol.sigma, count,
                    sol.platform_payoff});
  }
  return rows;
}

}  // namespace promptpricing
