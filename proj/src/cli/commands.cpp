#include "promptpricing/cli/commands.hpp"

#include <exception>
#include <string>

#include "promptpricing/heterogeneous.hpp"
#include "promptpricing/homogeneous.hpp"
#include "promptpricing/user_strategy.hpp"

namespace promptpricing::cli {

namespace {

QuadratureConfig quadrature(const Scenario& s, const CommandOptions& o) {
  QuadratureConfig q = s.quadrature;
  if (o.nodes) q.node_count = *o.nodes;
  return q;
}

std::vector<double> eps_axis(const Scenario& s, std::vector<std::string>& problems) {
  if (!s.sweep) return default_eps_grid();
  if (s.sweep->variable != "eps") {
    problems.push_back("sweep.variable: this command sweeps 'eps'");
    return {};
  }
  return s.sweep->values();
}

void require_pair(const Scenario& s, std::vector<std::string>& problems) {
  if (s.models.size() != 2) problems.push_back("models: this command needs exactly two models");
}

void check(std::vector<std::string>& problems) {
  if (!problems.empty()) throw ScenarioError(std::move(problems));
}

/// Runs body(i) for every sweep point and rethrows the first failure in
/// sweep order. Nested solver calls get the execution mode that avoids
/// oversubscribing: parallel across points, serial inside, and vice versa.
template <class Body>
void sweep(std::size_t n, Execution exec, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
  const Execution outer = n > 1 ? exec : Execution::Serial;
  const Execution inner = n > 1 ? Execution::Serial : exec;
  for_each_index(n, outer, [&](std::size_t i) {
    try {
      body(i, inner);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::vector<double> default_eps_grid() {
  std::vector<double> grid;
  for (int j = 1; j <= 99; ++j) grid.push_back(j / 100.0);
  return grid;
}

Table cmd_user_strategy(const Scenario& scenario, const CommandOptions&) {
  std::vector<std::string> problems;
  for (std::size_t i = 0; i < scenario.models.size(); ++i) {
    if (!scenario.models[i].price) {
      problems.push_back("models[" + std::to_string(i) + "].price: required by user-strategy");
    }
  }
  const std::vector<double> grid = eps_axis(scenario, problems);
  check(problems);

  const ModelSet models = scenario.model_set();
  const PriceSchedule prices = scenario.prices();
  Table table;
  table.header.push_back("eps");
  for (const auto& m : models) table.header.push_back("n_" + m.id());
  table.header.push_back("selected");
  table.header.push_back("payoff");

  for (const double e : grid) {
    const Ambiguity eps(e);
    std::vector<Cell> row{e};
    for (const auto& m : models) {
      const PromptCount n = optimal_prompt_count(m, prices.price_of(m.id()), eps);
      row.emplace_back(n.is_unbounded() ? Cell{std::string("unbounded")} : Cell{n.value()});
    }
    const UserDecision d = select_model(models, prices, eps);
    row.emplace_back(d.selected_model.value_or("none"));
    row.emplace_back(d.payoff);
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table cmd_homog_price(const Scenario& scenario, const CommandOptions&) {
  std::vector<std::string> problems;
  const std::vector<double> grid = eps_axis(scenario, problems);
  check(problems);

  Table table;
  table.header = {"eps", "price", "sigma", "model", "prompt_count", "platform_payoff"};
  for (const auto& p : homogeneous_payoff_curve(scenario.model_set(), grid)) {
    table.rows.push_back({p.eps, p.price, p.sigma, p.served ? p.model : std::string("none"),
                          p.prompt_count, p.platform_payoff});
  }
  return table;
}

OppCommandResult cmd_opp(const Scenario& scenario, const CommandOptions& options) {
  std::vector<std::string> problems;
  require_pair(scenario, problems);
  check(problems);

  const ModelSet models = scenario.model_set();
  const AmbiguityDistribution dist = scenario.make_distribution();
  OppConfig cfg;
  cfg.step_alpha = options.alpha.value_or(scenario.opp_alpha);
  cfg.refinement = scenario.opp_refine;
  cfg.quad = quadrature(scenario, options);
  cfg.execution = options.execution;
  const OppResult result = opp(models, dist, cfg);

  const GaiModel& low = models.low();
  const GaiModel& high = models.high();
  OppCommandResult out;
  out.summary.header = {"method",          "price_" + low.id(),  "price_" + high.id(),
                        "platform_payoff", "volume_" + low.id(), "volume_" + high.id()};
  const auto& o = result.outcome;
  std::vector<Cell> row{std::string(to_string(o.method)),
                        o.schedule.price_of(low.id()),
                        o.schedule.price_of(high.id()),
                        o.platform_payoff,
                        o.prompt_volume.at(low.id()),
                        o.prompt_volume.at(high.id())};
  if (options.oracle) {
    out.summary.header.push_back("oracle_payoff");
    row.emplace_back(
        grid_oracle(models, dist, scenario.oracle_grid, cfg.quad, options.execution)
            .platform_payoff);
  }
  out.summary.rows.push_back(std::move(row));

  out.trace.header = {"step", "price_low", "price_high", "platform_payoff"};
  for (std::size_t i = 0; i < result.trace.size(); ++i) {
    const auto& s = result.trace[i];
    out.trace.rows.push_back(
        {static_cast<std::int64_t>(i), s.price_low, s.price_high, s.platform_payoff});
  }
  return out;
}

Table cmd_compare(const Scenario& scenario, const CommandOptions& options) {
  std::vector<std::string> problems;
  require_pair(scenario, problems);
  if (scenario.distribution.kind != AmbiguityDistribution::Kind::Uniform) {
    problems.push_back("distribution.kind: compare sweeps the lower bound of a uniform density");
  }
  for (std::size_t i = 0; i < scenario.models.size(); ++i) {
    if (!(scenario.models[i].cost > 0.0)) {
      problems.push_back("models[" + std::to_string(i) +
                         "].cost: cost-based pricing needs a positive cost");
    }
  }
  std::vector<double> axis{scenario.distribution.min};
  if (scenario.sweep) {
    if (scenario.sweep->variable != "eps_min") {
      problems.push_back("sweep.variable: compare sweeps 'eps_min'");
    } else {
      axis = scenario.sweep->values();
      if (!(axis.back() < scenario.distribution.max)) {
        problems.push_back("sweep.stop: must be below distribution.max");
      }
    }
  }
  check(problems);

  const ModelSet models = scenario.model_set();
  const QuadratureConfig quad = quadrature(scenario, options);
  std::vector<std::vector<Cell>> rows(axis.size());
  sweep(axis.size(), options.execution, [&](std::size_t i, Execution inner) {
    const AmbiguityDistribution dist = scenario.make_distribution(axis[i]);
    OppConfig cfg;
    cfg.step_alpha = options.alpha.value_or(scenario.opp_alpha);
    cfg.refinement = scenario.opp_refine;
    cfg.quad = quad;
    cfg.execution = inner;
    const double p_opp = opp(models, dist, cfg).outcome.platform_payoff;
    const double p_util = utility_based_pricing(models, dist, quad, inner).platform_payoff;
    const double p_cost = cost_based_pricing(models, dist, quad, inner).platform_payoff;
    rows[i] = {axis[i], p_opp, p_util, p_cost};
  });

  Table table;
  table.header = {"eps_min", "payoff_opp", "payoff_utility", "payoff_cost"};
  table.rows = std::move(rows);
  return table;
}

}  // namespace promptpricing::cli
