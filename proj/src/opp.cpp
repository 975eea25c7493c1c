#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "promptpricing/heterogeneous.hpp"
#include "promptpricing/numeric.hpp"

namespace promptpricing {

namespace {

constexpr double kNearZeroAmbiguity = 1e-6;

struct InnerSolution {
  double price_high = 0.0;
  double payoff = 0.0;
};

/// Lines 3-7 of the outer loop body: build G for this p_L, search its
/// stationary points on [C_H, bound(eps -> 0)] and score the winner with
/// the full platform payoff.
InnerSolution solve_inner(const NodeTable& table, const ModelSet& models, double price_low,
                          const OppConfig& cfg) {
  const GaiModel& high = models.high();
  const GainFunction gain(table, models, price_low);
  const double lo = std::max(high.cost(), 1e-9 * high.utility());
  const double hi = std::max(lo, gain.zero_ambiguity_bound());

  std::vector<double> candidates{lo};
  if (hi > lo) {
    const std::size_t m = cfg.gain_grid;
    std::vector<double> xs(m);
    std::vector<double> gs(m);
    for (std::size_t j = 0; j < m; ++j) {
      xs[j] = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(m - 1);
      gs[j] = gain(xs[j]);
    }
    // Sign change + to - of the forward difference.
    std::vector<std::size_t> peaks;
    for (std::size_t j = 1; j + 1 < m; ++j) {
      if (gs[j] > gs[j - 1] && gs[j] >= gs[j + 1]) peaks.push_back(j);
    }
    std::stable_sort(peaks.begin(), peaks.end(),
                     [&](std::size_t a, std::size_t b) { return gs[a] > gs[b]; });
    if (peaks.size() > cfg.polish_limit) peaks.resize(cfg.polish_limit);
    for (const std::size_t j : peaks) {
      const Maximum polished =
          golden_section_maximize(gain, xs[j - 1], xs[j + 1], 1e-9 * high.utility());
      candidates.push_back(polished.value > gs[j] ? polished.x : xs[j]);
    }
    candidates.push_back(hi);
  }

  InnerSolution best{candidates.front(), 0.0};
  double best_gain = gain(candidates.front());
  for (std::size_t c = 1; c < candidates.size(); ++c) {
    const double g = gain(candidates[c]);
    if (g > best_gain) {
      best_gain = g;
      best.price_high = candidates[c];
    }
  }
  const std::vector<PricedModel> priced{PricedModel(models.low(), price_low),
                                        PricedModel(high, best.price_high)};
  best.payoff = evaluate_schedule(table, priced).payoff;
  return best;
}

}  // namespace

GainFunction::GainFunction(const NodeTable& table, const ModelSet& models, double price_low)
    : table_(&table), high_(&models.high()) {
  const GaiModel& low = models.low();
  const PricedModel pl(low, price_low);
  const double u_high = high_->utility();
  const double margin = price_low - low.cost();
  low_margin_.resize(table.size());
  bound_.resize(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::int64_t n = table.prompt_count(i, pl);
    const double alternative = n > 0 ? table.payoff(i, pl, n) : 0.0;
    low_margin_[i] = margin * static_cast<double>(n);
    bound_[i] = detail::preference_bound(table.eps(i), u_high, alternative, [&](std::int64_t k) {
                  return table.power(i, k);
                }).value;
    base_ += table.weight(i) * low_margin_[i];
  }
  zero_bound_ =
      price_upper_bound(*high_, low, price_low, Ambiguity(kNearZeroAmbiguity)).value;
}

double GainFunction::operator()(double price_high) const {
  const PricedModel ph(*high_, price_high);
  const double margin = price_high - high_->cost();
  double g = 0.0;
  for (std::size_t i = 0; i < table_->size(); ++i) {
    if (price_high > bound_[i]) continue;
    const std::int64_t n = table_->prompt_count(i, ph);
    g += table_->weight(i) * (margin * static_cast<double>(n) - low_margin_[i]);
  }
  return g;
}

void OppConfig::validate(const ModelSet& models) const {
  std::vector<std::string> problems;
  if (!models.is_pair()) problems.push_back("OPP needs exactly two models");
  if (std::isnan(step_alpha) || step_alpha < 0.0) problems.push_back("step_alpha must be > 0");
  if (models.is_pair()) {
    const double alpha = resolved_alpha(models);
    if (!(alpha < models.low().utility())) problems.push_back("step_alpha must be < U_L");
  }
  if (gain_grid < 3) problems.push_back("gain_grid must be >= 3");
  if (quad.node_count < 3) problems.push_back("quadrature node_count must be >= 3");
  if (!problems.empty()) {
    std::ostringstream msg;
    for (std::size_t i = 0; i < problems.size(); ++i) msg << (i ? "; " : "") << problems[i];
    throw Error(ErrorCode::ConfigError, msg.str());
  }
}

OppResult opp(const ModelSet& models, const AmbiguityDistribution& dist, const OppConfig& cfg) {
  cfg.validate(models);
  const GaiModel& low = models.low();
  const GaiModel& high = models.high();
  const NodeTable table(dist, cfg.quad);
  const double alpha = cfg.resolved_alpha(models);

  std::vector<double> low_axis;
  if (low.cost() >= low.utility()) {
    low_axis.push_back(low.utility());
  } else {
    const double slack = 1e-12 * low.utility();
    for (std::int64_t j = 0;; ++j) {
      const double p = low.cost() + static_cast<double>(j) * alpha;
      if (p > low.utility() + slack) break;
      if (p > 0.0) low_axis.push_back(std::min(p, low.utility()));
    }
  }

  std::vector<InnerSolution> inner(low_axis.size());
  for_each_index(low_axis.size(), cfg.execution, [&](std::size_t j) {
    inner[j] = solve_inner(table, models, low_axis[j], cfg);
  });

  OppResult result;
  result.trace.reserve(low_axis.size());
  double best_low = low.utility();
  double best_high = high.utility();
  double best_payoff = 0.0;
  for (std::size_t j = 0; j < low_axis.size(); ++j) {
    result.trace.push_back({low_axis[j], inner[j].price_high, inner[j].payoff});
    if (inner[j].payoff >= best_payoff) {
      best_payoff = inner[j].payoff;
      best_low = low_axis[j];
      best_high = inner[j].price_high;
    }
  }

  if (cfg.refinement && low_axis.size() > 1) {
    const double a = std::max(low_axis.front(), best_low - alpha);
    const double b = std::min(low_axis.back(), best_low + alpha);
    if (b > a) {
      const Maximum polished = golden_section_maximize(
          [&](double p) { return solve_inner(table, models, p, cfg).payoff; }, a, b, 1e-3 * alpha);
      if (polished.value > best_payoff) {
        best_low = polished.x;
        best_high = solve_inner(table, models, best_low, cfg).price_high;
      }
    }
  }

  const double prices[2] = {best_low, best_high};
  result.outcome = outcome_for(table, models, prices, PricingMethod::Opp);
  return result;
}

}  // namespace promptpricing
