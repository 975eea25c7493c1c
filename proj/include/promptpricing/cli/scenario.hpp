#pragma once

// Scenario files: YAML documents describing the model set, the ambiguity
// density, solver settings and an optional sweep axis. See
// docs/formats.md for the grammar.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "promptpricing/core.hpp"

namespace promptpricing::cli {

struct ModelSpec {
  std::string id;
  double utility = 0.0;
  double cost = 0.0;
  std::optional<double> price;
};

struct DistributionSpec {
  AmbiguityDistribution::Kind kind = AmbiguityDistribution::Kind::Uniform;
  double min = 0.0;
  double max = 1.0;
  std::vector<double> knots;
  std::vector<double> values;
};

struct SweepSpec {
  std::string variable;  // "eps" or "eps_min"
  double start = 0.0;
  double stop = 0.0;
  std::size_t points = 1;

  std::vector<double> values() const;
};

struct Scenario {
  std::string name;
  std::vector<ModelSpec> models;
  DistributionSpec distribution;
  QuadratureConfig quadrature;
  double opp_alpha = 0.0;  // 0: default 1e-3 * U_L
  bool opp_refine = true;
  std::size_t oracle_grid = 400;
  std::optional<SweepSpec> sweep;

  ModelSet model_set() const;
  AmbiguityDistribution make_distribution() const;
  /// Distribution with its lower support bound replaced (eps_min sweeps).
  AmbiguityDistribution make_distribution(double eps_min) const;
  /// Prices from the models' `price` fields.
  PriceSchedule prices() const;
};

/// Every violation found while loading, one "field: constraint" per entry.
class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  std::vector<std::string> problems_;
};

Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace promptpricing::cli
