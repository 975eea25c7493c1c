#pragma once

// Platform pricing when prompt ambiguity follows a population density.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "promptpricing/core.hpp"
#include "promptpricing/kernels.hpp"
#include "promptpricing/user_strategy.hpp"

namespace promptpricing {

enum class PricingMethod { Direct, SingleModel, Opp, UtilityBased, CostBased, GridOracle };

std::string_view to_string(PricingMethod method) noexcept;

struct PricingOutcome {
  PriceSchedule schedule;
  double platform_payoff = 0.0;
  std::map<std::string, double> prompt_volume;  // N_m
  PricingMethod method = PricingMethod::Direct;
};

/// Expected platform payoff sum_m (p_m - C_m) N_m by quadrature over the
/// users' decisions. Every price must be positive (UnboundedDemand).
PricingOutcome platform_payoff(const ModelSet& models, const PriceSchedule& schedule,
                               const AmbiguityDistribution& dist, const QuadratureConfig& quad);

/// Ambiguities at which `price` makes exactly k prompts boundary-optimal:
/// the two solutions of eps^(k-1) (1 - eps) U = price.
struct SegmentRoots {
  std::int64_t k;
  double lambda1;
  double lambda2;
};

std::optional<SegmentRoots> segment_roots(const GaiModel& model, double price, std::int64_t k);

/// Expected prompt volume of a lone model written as a layer sum: mass of
/// users buying at least one prompt plus, for each k >= 2, the mass in
/// [lambda1(k), lambda2(k)] buying at least k. Uses the exact CDF.
double layered_prompt_volume(const GaiModel& model, double price,
                             const AmbiguityDistribution& dist);

PricingOutcome single_model_price(const GaiModel& model, const AmbiguityDistribution& dist,
                                  const QuadratureConfig& quad);

/// Highest price of `model` at which a user of ambiguity eps still prefers it
/// over `alternative` priced at `alternative_price`.
struct PriceBound {
  double value = 0.0;
  std::int64_t tau = 0;
  bool dominated = false;  // model can never beat the alternative at this eps
};

PriceBound price_upper_bound(const GaiModel& model, const GaiModel& alternative,
                             double alternative_price, Ambiguity eps);

namespace detail {

inline constexpr std::int64_t kMaxPreferenceScan = 10'000'000;

/// Preference bound given the alternative's optimal payoff. `pow_eps(k)`
/// must return eps^k.
template <class PowEps>
PriceBound preference_bound(double eps, double utility, double alternative_payoff,
                            PowEps&& pow_eps) {
  PriceBound out;
  if (alternative_payoff >= utility) {
    out.dominated = true;
    return out;
  }
  for (std::int64_t k = 1; k < kMaxPreferenceScan; ++k) {
    const double kd = static_cast<double>(k);
    const double ek = pow_eps(k);
    const double gain = (1.0 - ek) * utility;
    if (alternative_payoff < gain - kd * ek * (1.0 - eps) * utility) {
      out.tau = k;
      out.value = (gain - alternative_payoff) / kd;
      return out;
    }
  }
  out.dominated = true;
  return out;
}

}  // namespace detail

struct OppConfig {
  double step_alpha = 0.0;  // outer p_L step; 0 means 1e-3 * U_L
  bool refinement = true;
  QuadratureConfig quad;
  std::size_t gain_grid = 1000;  // p_H grid for the stationary-point search
  std::size_t polish_limit = 16;  // local maxima of G polished per p_L
  Execution execution = Execution::Parallel;

  double resolved_alpha(const ModelSet& models) const {
    return step_alpha > 0.0 ? step_alpha : 1e-3 * models.low().utility();
  }
  void validate(const ModelSet& models) const;
};

struct OppStep {
  double price_low;
  double price_high;
  double platform_payoff;
};

struct OppResult {
  PricingOutcome outcome;
  std::vector<OppStep> trace;  // one row per outer-loop step
};

OppResult opp(const ModelSet& models, const AmbiguityDistribution& dist, const OppConfig& cfg);

/// Pieces of the inner OPP problem for one p_L, exposed for testing the
/// gain-function decomposition.
class GainFunction {
 public:
  GainFunction(const NodeTable& table, const ModelSet& models, double price_low);

  /// G(p_H): payoff change from moving the users with p_H <= bound(eps)
  /// to the high model.
  double operator()(double price_high) const;
  /// Payoff from the low model alone over the full density.
  double base_payoff() const noexcept { return base_; }
  /// Bound on p_H at eps -> 0, evaluated at eps = 1e-6.
  double zero_ambiguity_bound() const noexcept { return zero_bound_; }
  double node_bound(std::size_t i) const noexcept { return bound_[i]; }

 private:
  const NodeTable* table_;
  const GaiModel* high_;
  std::vector<double> low_margin_;  // (p_L - C_L) n_L at each node
  std::vector<double> bound_;
  double base_ = 0.0;
  double zero_bound_ = 0.0;
};

/// Exhaustive search of the (p_L, p_H) lattice (C_L, U_L] x (C_H, U_H] with
/// grid_n points per axis.
PricingOutcome grid_oracle(const ModelSet& models, const AmbiguityDistribution& dist,
                           std::size_t grid_n, const QuadratureConfig& quad,
                           Execution exec = Execution::Parallel);

/// Best schedule of the form p_m = beta U_m, beta on a 1e-3 grid in (0, 1).
PricingOutcome utility_based_pricing(const ModelSet& models, const AmbiguityDistribution& dist,
                                     const QuadratureConfig& quad,
                                     Execution exec = Execution::Parallel);

/// Best schedule of the form p_m = (1 + mu) C_m, mu on a 1e-3 grid in
/// [0, U_max / C_min]. Every cost must be positive (DegenerateCostBase).
PricingOutcome cost_based_pricing(const ModelSet& models, const AmbiguityDistribution& dist,
                                  const QuadratureConfig& quad,
                                  Execution exec = Execution::Parallel);

/// Evaluates a schedule with a prebuilt node table.
PricingOutcome outcome_for(const NodeTable& table, const ModelSet& models,
                           std::span<const double> prices, PricingMethod method);

}  // namespace promptpricing
