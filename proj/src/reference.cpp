#include "promptpricing/reference.hpp"

#include "promptpricing/heterogeneous.hpp"
#include "promptpricing/user_strategy.hpp"

namespace promptpricing::reference {

PayoffBreakdown platform_payoff(const ModelSet& models, const PriceSchedule& schedule,
                                const AmbiguityDistribution& dist, const QuadratureConfig& quad) {
  PayoffBreakdown out;
  out.volumes.assign(models.size(), 0.0);
  for (const auto& node : quadrature_nodes(dist, quad)) {
    const UserDecision d = select_model(models, schedule, Ambiguity(node.eps));
    if (!d.selected_model) continue;
    if (d.prompt_count.is_unbounded()) {
      throw Error(ErrorCode::UnboundedDemand, "zero price makes prompt demand unbounded");
    }
    out.volumes[*models.index_of(*d.selected_model)] +=
        node.weight * static_cast<double>(d.prompt_count.value());
  }
  for (std::size_t m = 0; m < models.size(); ++m) {
    out.payoff += (schedule.price_of(models[m].id()) - models[m].cost()) * out.volumes[m];
  }
  return out;
}

LatticeBest grid_oracle(const ModelSet& models, const AmbiguityDistribution& dist,
                        std::size_t grid_n, const QuadratureConfig& quad) {
  const GaiModel& low = models.low();
  const GaiModel& high = models.high();
  const auto axis = [grid_n](const GaiModel& m) {
    std::vector<double> out;
    if (m.cost() >= m.utility()) return std::vector<double>{m.utility()};
    for (std::size_t j = 1; j <= grid_n; ++j) {
      out.push_back(m.cost() +
                    (m.utility() - m.cost()) * static_cast<double>(j) / static_cast<double>(grid_n));
    }
    return out;
  };
  LatticeBest best{0.0, 0.0, 0.0};
  bool first = true;
  for (const double pl : axis(low)) {
    for (const double ph : axis(high)) {
      PriceSchedule schedule;
      schedule.set(low.id(), pl);
      schedule.set(high.id(), ph);
      const double payoff = reference::platform_payoff(models, schedule, dist, quad).payoff;
      if (first || payoff > best.payoff) best = {pl, ph, payoff};
      first = false;
    }
  }
  return best;
}

double gain(const ModelSet& models, const AmbiguityDistribution& dist, const QuadratureConfig& quad,
            double price_low, double price_high) {
  const GaiModel& low = models.low();
  const GaiModel& high = models.high();
  double g = 0.0;
  for (const auto& node : quadrature_nodes(dist, quad)) {
    const Ambiguity eps(node.eps);
    const PriceBound bound = price_upper_bound(high, low, price_low, eps);
    if (price_high > bound.value) continue;
    const auto n_high = optimal_prompt_count(high, price_high, eps).value();
    const auto n_low = optimal_prompt_count(low, price_low, eps).value();
    g += node.weight * ((price_high - high.cost()) * static_cast<double>(n_high) -
                        (price_low - low.cost()) * static_cast<double>(n_low));
  }
  return g;
}

}  // namespace promptpricing::reference
