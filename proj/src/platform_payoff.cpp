#include "promptpricing/heterogeneous.hpp"

namespace promptpricing {

std::string_view to_string(PricingMethod method) noexcept {
  switch (method) {
    case PricingMethod::Direct: return "direct";
    case PricingMethod::SingleModel: return "single_model";
    case PricingMethod::Opp: return "opp";
    case PricingMethod::UtilityBased: return "utility_based";
    case PricingMethod::CostBased: return "cost_based";
    case PricingMethod::GridOracle: return "grid_oracle";
  }
  return "unknown";
}

PricingOutcome outcome_for(const NodeTable& table, const ModelSet& models,
                           std::span<const double> prices, PricingMethod method) {
  const auto priced = price_models(models, prices);
  const PayoffBreakdown eval = evaluate_schedule(table, priced);
  PricingOutcome out;
  out.schedule = PriceSchedule::from_aligned(models, prices);
  out.platform_payoff = eval.payoff;
  for (std::size_t m = 0; m < models.size(); ++m) out.prompt_volume[models[m].id()] = eval.volumes[m];
  out.method = method;
  return out;
}

PricingOutcome platform_payoff(const ModelSet& models, const PriceSchedule& schedule,
                               const AmbiguityDistribution& dist, const QuadratureConfig& quad) {
  const std::vector<double> prices = schedule.aligned_to(models);
  for (std::size_t m = 0; m < models.size(); ++m) {
    if (prices[m] == 0.0) {
      throw Error(ErrorCode::UnboundedDemand,
                  "zero price for '" + models[m].id() + "' makes prompt demand unbounded");
    }
  }
  const NodeTable table(dist, quad);
  return outcome_for(table, models, prices, PricingMethod::Direct);
}

}  // namespace promptpricing
