#include "promptpricing/kernels.hpp"

#include <cmath>

namespace promptpricing {

PricedModel::PricedModel(const GaiModel& m, double p)
    : model(&m), price(p), log_price_ratio(std::log(p / m.utility())) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::UnboundedDemand,
                "model '" + m.id() + "' needs a positive finite price for demand to be bounded");
  }
}

std::vector<PricedModel> price_models(const ModelSet& models, std::span<const double> prices) {
  std::vector<PricedModel> out;
  out.reserve(models.size());
  for (std::size_t i = 0; i < models.size(); ++i) out.emplace_back(models[i], prices[i]);
  return out;
}

NodeTable::NodeTable(const AmbiguityDistribution& dist, const QuadratureConfig& quad) {
  const auto nodes = quadrature_nodes(dist, quad);
  const std::size_t n = nodes.size();
  eps_.reserve(n);
  weight_.reserve(n);
  one_minus_eps_.reserve(n);
  log_eps_.reserve(n);
  log_odds_.reserve(n);
  powers_.reserve(n * (kCachedPowers + 1));
  for (const auto& node : nodes) {
    const double e = node.eps;
    eps_.push_back(e);
    weight_.push_back(node.weight);
    one_minus_eps_.push_back(1.0 - e);
    log_eps_.push_back(std::log(e));
    log_odds_.push_back(std::log(e / (1.0 - e)));
    for (std::int64_t k = 0; k <= kCachedPowers; ++k) {
      powers_.push_back(std::pow(e, static_cast<double>(k)));
    }
  }
}

double NodeTable::power(std::size_t i, std::int64_t n) const {
  if (n <= kCachedPowers) return powers_[i * (kCachedPowers + 1) + static_cast<std::size_t>(n)];
  return std::pow(eps_[i], static_cast<double>(n));
}

NodeDecision NodeTable::decide(std::size_t i, std::span<const PricedModel> priced) const {
  NodeDecision best;
  for (std::size_t m = 0; m < priced.size(); ++m) {
    const PricedModel& pm = priced[m];
    const std::int64_t n = prompt_count(i, pm);
    if (n == 0) continue;
    const double value = payoff(i, pm, n);
    if (best.model < 0 ||
        detail::preferred_over(value, pm.utility(), pm.model->id(), best.payoff,
                               priced[static_cast<std::size_t>(best.model)].utility(),
                               priced[static_cast<std::size_t>(best.model)].model->id())) {
      best = {static_cast<int>(m), n, value};
    }
  }
  return best;
}

PayoffBreakdown evaluate_schedule(const NodeTable& table, std::span<const PricedModel> priced) {
  PayoffBreakdown out;
  out.volumes.assign(priced.size(), 0.0);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const NodeDecision d = table.decide(i, priced);
    if (d.model >= 0) {
      out.volumes[static_cast<std::size_t>(d.model)] +=
          table.weight(i) * static_cast<double>(d.count);
    }
  }
  for (std::size_t m = 0; m < priced.size(); ++m) {
    out.payoff += (priced[m].price - priced[m].cost()) * out.volumes[m];
  }
  return out;
}

std::vector<double> scan_schedules(const NodeTable& table, const ModelSet& models,
                                   std::span<const double> price_rows, Execution exec) {
  const std::size_t width = models.size();
  const std::size_t rows = price_rows.size() / width;
  // PricedModel construction validates prices; do it before the parallel region.
  std::vector<std::vector<PricedModel>> priced;
  priced.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    priced.push_back(price_models(models, price_rows.subspan(r * width, width)));
  }
  std::vector<double> payoffs(rows, 0.0);
  for_each_index(rows, exec, [&](std::size_t r) {
    payoffs[r] = evaluate_schedule(table, priced[r]).payoff;
  });
  return payoffs;
}

std::vector<double> lattice_payoffs(const NodeTable& table, const ModelSet& models,
                                    std::span<const double> low_axis,
                                    std::span<const double> high_axis, Execution exec) {
  const GaiModel& low = models.low();
  const GaiModel& high = models.high();
  std::vector<PricedModel> low_priced;
  std::vector<PricedModel> high_priced;
  for (const double p : low_axis) low_priced.emplace_back(low, p);
  for (const double p : high_axis) high_priced.emplace_back(high, p);

  const std::size_t nodes = table.size();
  std::vector<double> out(low_axis.size() * high_axis.size(), 0.0);
  for_each_index(low_axis.size(), exec, [&](std::size_t row) {
    const PricedModel& pl = low_priced[row];
    std::vector<std::int64_t> low_count(nodes);
    std::vector<double> low_payoff(nodes);
    for (std::size_t i = 0; i < nodes; ++i) {
      low_count[i] = table.prompt_count(i, pl);
      low_payoff[i] = low_count[i] > 0 ? table.payoff(i, pl, low_count[i]) : 0.0;
    }
    for (std::size_t col = 0; col < high_axis.size(); ++col) {
      const PricedModel& ph = high_priced[col];
      double volume_low = 0.0;
      double volume_high = 0.0;
      for (std::size_t i = 0; i < nodes; ++i) {
        // Same order as NodeTable::decide: low first, high may displace it.
        const std::int64_t nh = table.prompt_count(i, ph);
        const bool has_low = low_count[i] > 0;
        bool pick_high = false;
        if (nh > 0) {
          pick_high = !has_low ||
                      detail::preferred_over(table.payoff(i, ph, nh), high.utility(), high.id(),
                                             low_payoff[i], low.utility(), low.id());
        }
        if (pick_high) {
          volume_high += table.weight(i) * static_cast<double>(nh);
        } else if (has_low) {
          volume_low += table.weight(i) * static_cast<double>(low_count[i]);
        }
      }
      out[row * high_axis.size() + col] =
          (pl.price - low.cost()) * volume_low + (ph.price - high.cost()) * volume_high;
    }
  });
  return out;
}

}  // namespace promptpricing
