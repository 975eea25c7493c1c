#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "promptpricing/cli/scenario.hpp"
#include "promptpricing/cli/table.hpp"
#include "promptpricing/kernels.hpp"

namespace promptpricing::cli {

/// Command-line overrides applied on top of the scenario.
struct CommandOptions {
  std::optional<std::size_t> nodes;
  std::optional<double> alpha;
  bool oracle = false;
  Execution execution = Execution::Parallel;
};

/// Ambiguity axis used when a scenario has no eps sweep: 0.01 .. 0.99.
std::vector<double> default_eps_grid();

/// Columns: eps, n_<id> per model, selected, payoff. Every model needs a price.
Table cmd_user_strategy(const Scenario& scenario, const CommandOptions& options = {});

/// Columns: eps, price, sigma, model, prompt_count, platform_payoff.
Table cmd_homog_price(const Scenario& scenario, const CommandOptions& options = {});

struct OppCommandResult {
  /// Columns: method, price_<L>, price_<H>, platform_payoff, volume_<L>,
  /// volume_<H>, and oracle_payoff when requested.
  Table summary;
  /// Columns: step, price_low, price_high, platform_payoff.
  Table trace;
};
OppCommandResult cmd_opp(const Scenario& scenario, const CommandOptions& options = {});

/// Columns: eps_min, payoff_opp, payoff_utility, payoff_cost.
Table cmd_compare(const Scenario& scenario, const CommandOptions& options = {});

}  // namespace promptpricing::cli
