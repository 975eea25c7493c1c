// Exhaustive lattice oracle and the two proportional benchmark families.

#include <algorithm>
#include <cmath>

#include "promptpricing/heterogeneous.hpp"

namespace promptpricing {

namespace {

std::vector<double> open_closed_axis(double cost, double utility, std::size_t n) {
  if (cost >= utility) return {utility};
  std::vector<double> axis;
  axis.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) {
    axis.push_back(cost + (utility - cost) * static_cast<double>(j) / static_cast<double>(n));
  }
  return axis;
}

std::size_t first_argmax(const std::vector<double>& values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

}  // namespace

PricingOutcome grid_oracle(const ModelSet& models, const AmbiguityDistribution& dist,
                           std::size_t grid_n, const QuadratureConfig& quad, Execution exec) {
  if (grid_n < 50) throw Error(ErrorCode::ConfigError, "grid oracle needs grid_n >= 50");
  const GaiModel& low = models.low();
  const GaiModel& high = models.high();
  const NodeTable table(dist, quad);
  const auto low_axis = open_closed_axis(low.cost(), low.utility(), grid_n);
  const auto high_axis = open_closed_axis(high.cost(), high.utility(), grid_n);
  const auto payoffs = lattice_payoffs(table, models, low_axis, high_axis, exec);
  const std::size_t best = first_argmax(payoffs);
  const double prices[2] = {low_axis[best / high_axis.size()], high_axis[best % high_axis.size()]};
  return outcome_for(table, models, prices, PricingMethod::GridOracle);
}

PricingOutcome utility_based_pricing(const ModelSet& models, const AmbiguityDistribution& dist,
                                     const QuadratureConfig& quad, Execution exec) {
  const NodeTable table(dist, quad);
  constexpr int kSteps = 1000;
  std::vector<double> rows;
  rows.reserve(static_cast<std::size_t>(kSteps - 1) * models.size());
  for (int j = 1; j < kSteps; ++j) {
    const double beta = static_cast<double>(j) / kSteps;
    for (const auto& m : models) rows.push_back(beta * m.utility());
  }
  const auto payoffs = scan_schedules(table, models, rows, exec);
  const std::size_t best = first_argmax(payoffs);
  return outcome_for(table, models, std::span(rows).subspan(best * models.size(), models.size()),
                     PricingMethod::UtilityBased);
}

PricingOutcome cost_based_pricing(const ModelSet& models, const AmbiguityDistribution& dist,
                                  const QuadratureConfig& quad, Execution exec) {
  double u_max = 0.0;
  double c_min = INFINITY;
  for (const auto& m : models) {
    if (m.cost() <= 0.0) {
      throw Error(ErrorCode::DegenerateCostBase,
                  "model '" + m.id() + "' has zero cost; markup pricing is undefined");
    }
    u_max = std::max(u_max, m.utility());
    c_min = std::min(c_min, m.cost());
  }
  const NodeTable table(dist, quad);
  const auto last = static_cast<std::int64_t>(std::floor(u_max / c_min * 1000.0));
  std::vector<double> rows;
  for (std::int64_t j = 0; j <= last; ++j) {
    const double mu = static_cast<double>(j) / 1000.0;
    bool priced_out = true;
    for (const auto& m : models) {
      const double p = (1.0 + mu) * m.cost();
      rows.push_back(p);
      priced_out = priced_out && p >= m.utility();
    }
    // Every larger markup also prices every model out: payoff stays 0.
    if (priced_out) break;
  }
  const auto payoffs = scan_schedules(table, models, rows, exec);
  const std::size_t best = first_argmax(payoffs);
  return outcome_for(table, models, std::span(rows).subspan(best * models.size(), models.size()),
                     PricingMethod::CostBased);
}

}  // namespace promptpricing
