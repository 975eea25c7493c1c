#pragma once

// Domain types shared by every solver: generative models, price schedules,
// prompt ambiguity and its population density.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "promptpricing/error.hpp"

namespace promptpricing {

/// Absolute tolerance for comparisons against analytic thresholds.
inline constexpr double kThresholdTolerance = 1e-12;

/// A generative model offered by the platform: utility U delivered when the
/// intended task is fulfilled, and per-prompt operating cost C.
class GaiModel {
 public:
  GaiModel(std::string id, double utility, double cost);

  const std::string& id() const noexcept { return id_; }
  double utility() const noexcept { return utility_; }
  double cost() const noexcept { return cost_; }

 private:
  std::string id_;
  double utility_;
  double cost_;
};

/// Ordered, non-empty collection of models with distinct ids. A two-model
/// set is the low/high pair and must satisfy utility(low) < utility(high).
class ModelSet {
 public:
  explicit ModelSet(std::vector<GaiModel> models);

  std::size_t size() const noexcept { return models_.size(); }
  const GaiModel& operator[](std::size_t i) const { return models_[i]; }
  std::span<const GaiModel> models() const noexcept { return models_; }
  auto begin() const noexcept { return models_.begin(); }
  auto end() const noexcept { return models_.end(); }

  std::optional<std::size_t> index_of(std::string_view id) const;

  bool is_pair() const noexcept { return models_.size() == 2; }
  /// Throws ConfigError unless this is a two-model set.
  const GaiModel& low() const;
  const GaiModel& high() const;

 private:
  std::vector<GaiModel> models_;
};

/// Per-prompt price for each model, keyed by model id.
class PriceSchedule {
 public:
  PriceSchedule() = default;

  void set(const std::string& id, double price);
  bool contains(std::string_view id) const;
  double price_of(std::string_view id) const;

  /// Prices in model-set order; throws SchedulePriceMissing for a gap.
  std::vector<double> aligned_to(const ModelSet& models) const;

  const std::map<std::string, double, std::less<>>& prices() const noexcept { return prices_; }

  static PriceSchedule from_aligned(const ModelSet& models, std::span<const double> prices);

 private:
  std::map<std::string, double, std::less<>> prices_;
};

/// Prompt ambiguity: probability mass a single prompt leaves on the wrong
/// intention. Strictly inside (0, 1).
class Ambiguity {
 public:
  explicit Ambiguity(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// Population density of prompt ambiguity on [0, 1]. Both kinds are stored
/// as a piecewise-linear density over ascending knots; a uniform law is the
/// two-knot flat case.
class AmbiguityDistribution {
 public:
  enum class Kind { Uniform, Tabulated };

  static AmbiguityDistribution uniform(double eps_min, double eps_max);
  /// Values are renormalised so the density integrates to one.
  static AmbiguityDistribution tabulated(std::vector<double> knots, std::vector<double> values);

  Kind kind() const noexcept { return kind_; }
  double density(double eps) const;
  double cdf(double eps) const;
  /// Probability of eps in [a, b].
  double mass(double a, double b) const { return b <= a ? 0.0 : cdf(b) - cdf(a); }

  double support_min() const noexcept { return knots_.front(); }
  double support_max() const noexcept { return knots_.back(); }
  const std::vector<double>& knots() const noexcept { return knots_; }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  AmbiguityDistribution(Kind kind, std::vector<double> knots, std::vector<double> values);

  Kind kind_;
  std::vector<double> knots_;
  std::vector<double> values_;
  std::vector<double> cumulative_;  // cdf at each knot
};

struct QuadratureConfig {
  std::size_t node_count = 2001;

  void validate() const;
};

struct QuadratureNode {
  double eps;
  double weight;  // density(eps) * width
};

/// Composite midpoint nodes over the distribution's support. Midpoints of
/// an open partition, so eps = 0 and eps = 1 are never produced.
std::vector<QuadratureNode> quadrature_nodes(const AmbiguityDistribution& dist,
                                             const QuadratureConfig& quad);

}  // namespace promptpricing
