#include "promptpricing/cli/app.hpp"

#include <filesystem>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "promptpricing/cli/commands.hpp"
#include "promptpricing/error.hpp"

namespace promptpricing::cli {

namespace {

struct Arguments {
  std::string scenario;
  std::string out;
  bool json = false;
  bool oracle = false;
  std::string trace;
  std::optional<std::size_t> nodes;
  std::optional<double> alpha;
};

void add_options(CLI::App& cmd, Arguments& a) {
  cmd.add_option("--scenario", a.scenario, "Scenario file")->required();
  cmd.add_option("--out", a.out, "Output CSV path")->required();
  cmd.add_flag("--json", a.json, "Also write a JSON mirror next to the CSV");
  cmd.add_flag("--oracle", a.oracle, "opp: append the lattice oracle payoff");
  cmd.add_option("--trace", a.trace, "opp: per-step trace CSV path");
  cmd.add_option("--nodes", a.nodes, "Quadrature node count")->check(CLI::Range(3, 10'000'000));
  cmd.add_option("--alpha", a.alpha, "opp/compare: outer price step")
      ->check(CLI::PositiveNumber);
}

void emit(const Table& table, const std::filesystem::path& path, bool json) {
  write_csv_file(path, table);
  if (json) {
    auto mirror = path;
    write_json_file(mirror.replace_extension(".json"), table);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prompt pricing solver"};
  app.require_subcommand(1);
  Arguments args;
  const char* verbs[] = {"user-strategy", "homog-price", "opp", "compare"};
  const char* about[] = {
      "Users' optimal prompt counts and model choice over an ambiguity grid",
      "Optimal homogeneous price and platform payoff over an ambiguity grid",
      "Two-model pricing search for a heterogeneous population",
      "Search payoff against utility- and cost-based pricing over eps_min"};
  for (std::size_t i = 0; i < 4; ++i) add_options(*app.add_subcommand(verbs[i], about[i]), args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  if ((args.oracle || !args.trace.empty()) && verb != "opp") {
    err << "usage error: --oracle and --trace apply to opp only\n";
    return kExitUsage;
  }

  CommandOptions options;
  options.nodes = args.nodes;
  options.alpha = args.alpha;
  options.oracle = args.oracle;

  try {
    const Scenario scenario = load_scenario(args.scenario);
    if (verb == "user-strategy") {
      emit(cmd_user_strategy(scenario, options), args.out, args.json);
    } else if (verb == "homog-price") {
      emit(cmd_homog_price(scenario, options), args.out, args.json);
    } else if (verb == "opp") {
      const OppCommandResult r = cmd_opp(scenario, options);
      emit(r.summary, args.out, args.json);
      if (!args.trace.empty()) write_csv_file(args.trace, r.trace);
    } else {
      emit(cmd_compare(scenario, options), args.out, args.json);
    }
  } catch (const ScenarioError& e) {
    err << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.is_numerical() ? kExitNumerical : kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace promptpricing::cli
