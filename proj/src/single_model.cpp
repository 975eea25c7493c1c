#include <algorithm>
#include <cmath>

#include "promptpricing/heterogeneous.hpp"
#include "promptpricing/numeric.hpp"

namespace promptpricing {

namespace {

/// max over eps of eps^(k-1) (1 - eps), i.e. (k-1)^(k-1) / k^k.
double segment_peak(std::int64_t k) {
  const double kd = static_cast<double>(k);
  return std::pow((kd - 1.0) / kd, kd - 1.0) / kd;
}

constexpr double kRootTolerance = 1e-14;

}  // namespace

std::optional<SegmentRoots> segment_roots(const GaiModel& model, double price, std::int64_t k) {
  if (k < 2) throw Error(ErrorCode::ConfigError, "segment index k must be >= 2");
  if (!(price > 0.0)) throw Error(ErrorCode::InvalidPrice, "segment roots need a positive price");
  const double ratio = price / model.utility();
  const double peak = segment_peak(k);
  if (ratio > peak + kThresholdTolerance) return std::nullopt;
  const double apex = (static_cast<double>(k) - 1.0) / static_cast<double>(k);
  if (ratio >= peak) return SegmentRoots{k, apex, apex};
  const double km1 = static_cast<double>(k - 1);
  const auto g = [&](double e) { return std::pow(e, km1) * (1.0 - e) - ratio; };
  const double lambda1 = find_root_bracketed(g, 0.0, apex, kRootTolerance);
  const double lambda2 = find_root_bracketed(g, apex, 1.0, kRootTolerance);
  return SegmentRoots{k, lambda1, lambda2};
}

double layered_prompt_volume(const GaiModel& model, double price,
                             const AmbiguityDistribution& dist) {
  if (price >= model.utility()) return 0.0;
  double volume = dist.mass(0.0, 1.0 - price / model.utility());
  const std::int64_t top = prompt_upper_bound(model, price);
  for (std::int64_t k = 2; k <= top; ++k) {
    const auto roots = segment_roots(model, price, k);
    if (!roots) break;
    volume += dist.mass(roots->lambda1, roots->lambda2);
  }
  return volume;
}

PricingOutcome single_model_price(const GaiModel& model, const AmbiguityDistribution& dist,
                                  const QuadratureConfig& quad) {
  const ModelSet models({model});
  const NodeTable table(dist, quad);
  const double u = model.utility();
  const double c = model.cost();
  if (c >= u) {
    const double price = u;
    return outcome_for(table, models, std::span(&price, 1), PricingMethod::SingleModel);
  }

  const double lo = c > 0.0 ? c : 1e-6 * u;
  const auto objective = [&](double p) { return (p - c) * layered_prompt_volume(model, p, dist); };

  // The objective is smooth between prices where a segment appears
  // (peak of eps^(k-1)(1-eps)) or a root crosses a density knot.
  const std::int64_t max_k = std::min<std::int64_t>(prompt_upper_bound(model, lo) + 1, 5000);
  std::vector<double> cuts{lo, u};
  for (std::int64_t k = 1; k <= max_k; ++k) {
    cuts.push_back(u * segment_peak(k + 1));
    for (const double e : dist.knots()) {
      if (e > 0.0 && e < 1.0) cuts.push_back(u * std::pow(e, static_cast<double>(k - 1)) * (1.0 - e));
    }
  }
  std::erase_if(cuts, [&](double p) { return p < lo || p > u; });
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  Maximum best{u, 0.0};
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    if (cuts[s + 1] - cuts[s] < 1e-15) continue;
    const Maximum m = golden_section_maximize(objective, cuts[s], cuts[s + 1], 1e-10 * u);
    if (m.value > best.value) best = m;
  }
  constexpr int kScan = 2000;
  for (int j = 1; j <= kScan; ++j) {
    const double p = lo + (u - lo) * j / kScan;
    const double value = objective(p);
    if (value > best.value) best = {p, value};
  }
  const double price = best.x;
  return outcome_for(table, models, std::span(&price, 1), PricingMethod::SingleModel);
}

}  // namespace promptpricing
