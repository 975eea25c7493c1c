#pragma once

// Straightforward serial implementations built only from the scalar
// user-strategy functions. Slow; used by tests and the benchmark as the
// baseline the cached, OpenMP kernels must reproduce.

#include <vector>

#include "promptpricing/core.hpp"
#include "promptpricing/kernels.hpp"

namespace promptpricing::reference {

/// Per-node select_model, accumulated in node order.
PayoffBreakdown platform_payoff(const ModelSet& models, const PriceSchedule& schedule,
                                const AmbiguityDistribution& dist, const QuadratureConfig& quad);

struct LatticeBest {
  double price_low;
  double price_high;
  double payoff;
};

/// Nested loops over the same lattice as grid_oracle.
LatticeBest grid_oracle(const ModelSet& models, const AmbiguityDistribution& dist,
                        std::size_t grid_n, const QuadratureConfig& quad);

/// G(p_H) for a given p_L from price_upper_bound and optimal_prompt_count.
double gain(const ModelSet& models, const AmbiguityDistribution& dist, const QuadratureConfig& quad,
            double price_low, double price_high);

}  // namespace promptpricing::reference
