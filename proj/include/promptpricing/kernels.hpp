#pragma once

// Hot loops behind the heterogeneous solvers. A NodeTable caches, for every
// quadrature node, the logarithms and powers of eps that the user-side
// closed forms need, so a node decision costs a division and a floor. The
// cached values are produced by the same std:: calls the scalar functions
// in user_strategy use, so kernel decisions agree with select_model bit
// for bit.
//
// Parallel loops write into index-addressed storage and every reduction
// runs serially in index order: results do not depend on thread count.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "promptpricing/core.hpp"
#include "promptpricing/user_strategy.hpp"

namespace promptpricing {

enum class Execution { Serial, Parallel };

/// Runs body(i) for i in [0, n). Parallel uses an OpenMP worksharing loop;
/// body must not throw and must only write state owned by index i.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  const auto count = static_cast<std::int64_t>(n);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
  } else {
    for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
  }
}

/// A model together with its price and the price-dependent log term.
struct PricedModel {
  const GaiModel* model;
  double price;
  double log_price_ratio;  // ln(price / utility)

  PricedModel(const GaiModel& m, double p);
  double utility() const noexcept { return model->utility(); }
  double cost() const noexcept { return model->cost(); }
};

std::vector<PricedModel> price_models(const ModelSet& models, std::span<const double> prices);

struct NodeDecision {
  int model = -1;  // index into the priced-model span, -1 for no purchase
  std::int64_t count = 0;
  double payoff = 0.0;
};

class NodeTable {
 public:
  static constexpr std::int64_t kCachedPowers = 64;

  NodeTable(const AmbiguityDistribution& dist, const QuadratureConfig& quad);

  std::size_t size() const noexcept { return eps_.size(); }
  double eps(std::size_t i) const noexcept { return eps_[i]; }
  double weight(std::size_t i) const noexcept { return weight_[i]; }

  /// eps_i^n, identical to std::pow(eps_i, double(n)).
  double power(std::size_t i, std::int64_t n) const;

  /// Optimal prompt count at node i for a positive price.
  std::int64_t prompt_count(std::size_t i, const PricedModel& pm) const {
    return detail::finite_prompt_count(pm.price, pm.utility(), one_minus_eps_[i],
                                       pm.log_price_ratio, log_odds_[i], log_eps_[i]);
  }

  double payoff(std::size_t i, const PricedModel& pm, std::int64_t n) const {
    const double nd = static_cast<double>(n);
    return (1.0 - power(i, n)) * pm.utility() - nd * pm.price;
  }

  /// Same rule as select_model, evaluated at node i.
  NodeDecision decide(std::size_t i, std::span<const PricedModel> priced) const;

 private:
  std::vector<double> eps_;
  std::vector<double> weight_;
  std::vector<double> one_minus_eps_;
  std::vector<double> log_eps_;
  std::vector<double> log_odds_;
  std::vector<double> powers_;  // row-major, kCachedPowers + 1 per node
};

/// Platform payoff and per-model prompt volumes N_m for one schedule.
struct PayoffBreakdown {
  double payoff = 0.0;
  std::vector<double> volumes;
};

/// Serial node sweep; the building block of every parallel scan below.
PayoffBreakdown evaluate_schedule(const NodeTable& table, std::span<const PricedModel> priced);

/// Payoff of each candidate price vector (row-major, models.size() per row).
std::vector<double> scan_schedules(const NodeTable& table, const ModelSet& models,
                                   std::span<const double> price_rows, Execution exec);

/// Payoff on the lattice low_axis x high_axis for a two-model set, row-major
/// with the low-model price as the row index.
std::vector<double> lattice_payoffs(const NodeTable& table, const ModelSet& models,
                                    std::span<const double> low_axis,
                                    std::span<const double> high_axis, Execution exec);

}  // namespace promptpricing
