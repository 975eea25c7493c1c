#include "promptpricing/cli/scenario.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace promptpricing::cli {

namespace {

class Reader {
 public:
  std::vector<std::string> problems;

  void unknown_keys(const YAML::Node& node, const std::string& path,
                    std::initializer_list<std::string_view> allowed) {
    if (!node.IsMap()) return;
    for (const auto& kv : node) {
      const auto key = kv.first.as<std::string>();
      bool known = false;
      for (const auto a : allowed) known = known || key == a;
      if (!known) problems.push_back(join(path, key) + ": unknown key");
    }
  }

  std::optional<double> number(const YAML::Node& parent, const std::string& path,
                               const std::string& key, bool required) {
    const YAML::Node node = parent[key];
    if (!node) {
      if (required) problems.push_back(join(path, key) + ": required");
      return std::nullopt;
    }
    try {
      const double v = node.as<double>();
      if (!std::isfinite(v)) {
        problems.push_back(join(path, key) + ": must be a finite decimal");
        return std::nullopt;
      }
      return v;
    } catch (const YAML::Exception&) {
      problems.push_back(join(path, key) + ": must be a decimal number");
      return std::nullopt;
    }
  }

  std::optional<long long> integer(const YAML::Node& parent, const std::string& path,
                                   const std::string& key) {
    const YAML::Node node = parent[key];
    if (!node) return std::nullopt;
    try {
      return node.as<long long>();
    } catch (const YAML::Exception&) {
      problems.push_back(join(path, key) + ": must be an integer");
      return std::nullopt;
    }
  }

  std::optional<std::string> text(const YAML::Node& parent, const std::string& path,
                                  const std::string& key, bool required) {
    const YAML::Node node = parent[key];
    if (!node) {
      if (required) problems.push_back(join(path, key) + ": required");
      return std::nullopt;
    }
    if (!node.IsScalar()) {
      problems.push_back(join(path, key) + ": must be a string");
      return std::nullopt;
    }
    return node.as<std::string>();
  }

  std::vector<double> numbers(const YAML::Node& parent, const std::string& path,
                              const std::string& key) {
    std::vector<double> out;
    const YAML::Node node = parent[key];
    if (!node) {
      problems.push_back(join(path, key) + ": required");
      return out;
    }
    if (!node.IsSequence()) {
      problems.push_back(join(path, key) + ": must be a list of decimals");
      return out;
    }
    for (std::size_t i = 0; i < node.size(); ++i) {
      try {
        out.push_back(node[i].as<double>());
      } catch (const YAML::Exception&) {
        problems.push_back(join(path, key) + "[" + std::to_string(i) + "]: must be a decimal");
      }
    }
    return out;
  }

  static std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }
};

void read_models(Reader& r, const YAML::Node& root, Scenario& s) {
  const YAML::Node models = root["models"];
  if (!models) {
    r.problems.push_back("models: required");
    return;
  }
  if (!models.IsSequence() || models.size() == 0) {
    r.problems.push_back("models: must be a non-empty list");
    return;
  }
  std::set<std::string> ids;
  for (std::size_t i = 0; i < models.size(); ++i) {
    const std::string path = "models[" + std::to_string(i) + "]";
    const YAML::Node m = models[i];
    if (!m.IsMap()) {
      r.problems.push_back(path + ": must be a mapping");
      continue;
    }
    r.unknown_keys(m, path, {"id", "utility", "cost", "price"});
    ModelSpec spec;
    spec.id = r.text(m, path, "id", true).value_or("");
    if (!spec.id.empty() && !ids.insert(spec.id).second) {
      r.problems.push_back(path + ".id: duplicate id '" + spec.id + "'");
    }
    if (const auto u = r.number(m, path, "utility", true)) {
      spec.utility = *u;
      if (*u <= 0.0) r.problems.push_back(path + ".utility: must be > 0");
    }
    if (const auto c = r.number(m, path, "cost", true)) {
      spec.cost = *c;
      if (*c < 0.0) r.problems.push_back(path + ".cost: must be >= 0");
    }
    if (const auto p = r.number(m, path, "price", false)) {
      spec.price = *p;
      if (*p < 0.0) r.problems.push_back(path + ".price: must be >= 0");
    }
    s.models.push_back(spec);
  }
  if (s.models.size() == 2 && s.models[0].utility > 0.0 &&
      !(s.models[0].utility < s.models[1].utility)) {
    r.problems.push_back("models: a two-model set must list the lower-utility model first");
  }
}

void read_distribution(Reader& r, const YAML::Node& root, Scenario& s) {
  const YAML::Node d = root["distribution"];
  if (!d) {
    r.problems.push_back("distribution: required");
    return;
  }
  r.unknown_keys(d, "distribution", {"kind", "min", "max", "knots", "values"});
  const std::string kind = r.text(d, "distribution", "kind", true).value_or("");
  auto& spec = s.distribution;
  if (kind == "uniform") {
    spec.kind = AmbiguityDistribution::Kind::Uniform;
    spec.min = r.number(d, "distribution", "min", true).value_or(0.0);
    spec.max = r.number(d, "distribution", "max", true).value_or(1.0);
    if (!(spec.min >= 0.0 && spec.max <= 1.0 && spec.min < spec.max)) {
      r.problems.push_back("distribution: uniform bounds must satisfy 0 <= min < max <= 1");
    }
  } else if (kind == "tabulated") {
    spec.kind = AmbiguityDistribution::Kind::Tabulated;
    spec.knots = r.numbers(d, "distribution", "knots");
    spec.values = r.numbers(d, "distribution", "values");
    try {
      (void)AmbiguityDistribution::tabulated(spec.knots, spec.values);
    } catch (const Error& e) {
      r.problems.push_back(std::string("distribution: ") + e.what());
    }
  } else if (!kind.empty()) {
    r.problems.push_back("distribution.kind: must be 'uniform' or 'tabulated'");
  }
}

void read_settings(Reader& r, const YAML::Node& root, Scenario& s) {
  if (const YAML::Node q = root["quadrature"]) {
    r.unknown_keys(q, "quadrature", {"nodes"});
    if (const auto n = r.integer(q, "quadrature", "nodes")) {
      if (*n < 3) {
        r.problems.push_back("quadrature.nodes: must be >= 3");
      } else {
        s.quadrature.node_count = static_cast<std::size_t>(*n);
      }
    }
  }
  if (const YAML::Node o = root["opp"]) {
    r.unknown_keys(o, "opp", {"alpha", "refine", "oracle_grid"});
    if (const auto a = r.number(o, "opp", "alpha", false)) {
      s.opp_alpha = *a;
      if (*a <= 0.0) r.problems.push_back("opp.alpha: must be > 0");
    }
    if (const YAML::Node refine = o["refine"]) {
      try {
        s.opp_refine = refine.as<bool>();
      } catch (const YAML::Exception&) {
        r.problems.push_back("opp.refine: must be true or false");
      }
    }
    if (const auto g = r.integer(o, "opp", "oracle_grid")) {
      if (*g < 50) {
        r.problems.push_back("opp.oracle_grid: must be >= 50");
      } else {
        s.oracle_grid = static_cast<std::size_t>(*g);
      }
    }
  }
  if (const YAML::Node w = root["sweep"]) {
    r.unknown_keys(w, "sweep", {"variable", "start", "stop", "points"});
    SweepSpec sweep;
    sweep.variable = r.text(w, "sweep", "variable", true).value_or("");
    if (!sweep.variable.empty() && sweep.variable != "eps" && sweep.variable != "eps_min") {
      r.problems.push_back("sweep.variable: must be 'eps' or 'eps_min'");
    }
    sweep.start = r.number(w, "sweep", "start", true).value_or(0.0);
    sweep.stop = r.number(w, "sweep", "stop", true).value_or(0.0);
    const auto points = r.integer(w, "sweep", "points");
    if (!points) {
      if (!w["points"]) r.problems.push_back("sweep.points: required");
    } else if (*points < 1) {
      r.problems.push_back("sweep.points: must be >= 1");
    } else {
      sweep.points = static_cast<std::size_t>(*points);
    }
    if (sweep.points > 1 && !(sweep.stop > sweep.start)) {
      r.problems.push_back("sweep: stop must be greater than start");
    }
    if (sweep.variable == "eps" && !(sweep.start > 0.0 && sweep.stop < 1.0)) {
      r.problems.push_back("sweep: eps values must lie strictly inside (0, 1)");
    }
    if (sweep.variable == "eps_min" && !(sweep.start >= 0.0 && sweep.stop < 1.0)) {
      r.problems.push_back("sweep: eps_min values must lie in [0, 1)");
    }
    s.sweep = sweep;
  }
}

}  // namespace

std::vector<double> SweepSpec::values() const {
  std::vector<double> out;
  out.reserve(points);
  if (points == 1) return {start};
  for (std::size_t i = 0; i < points; ++i) {
    out.push_back(start + (stop - start) * static_cast<double>(i) / static_cast<double>(points - 1));
  }
  return out;
}

ModelSet Scenario::model_set() const {
  std::vector<GaiModel> out;
  for (const auto& m : models) out.emplace_back(m.id, m.utility, m.cost);
  return ModelSet(std::move(out));
}

AmbiguityDistribution Scenario::make_distribution() const {
  if (distribution.kind == AmbiguityDistribution::Kind::Uniform) {
    return AmbiguityDistribution::uniform(distribution.min, distribution.max);
  }
  return AmbiguityDistribution::tabulated(distribution.knots, distribution.values);
}

AmbiguityDistribution Scenario::make_distribution(double eps_min) const {
  return AmbiguityDistribution::uniform(eps_min, distribution.max);
}

PriceSchedule Scenario::prices() const {
  PriceSchedule schedule;
  for (const auto& m : models) {
    if (m.price) schedule.set(m.id, *m.price);
  }
  return schedule;
}

namespace {

std::string summarize(const std::vector<std::string>& problems) {
  std::ostringstream msg;
  msg << "invalid scenario (" << problems.size() << " problem" << (problems.size() == 1 ? "" : "s")
      << ")";
  for (const auto& p : problems) msg << "\n  " << p;
  return msg.str();
}

}  // namespace

ScenarioError::ScenarioError(std::vector<std::string> problems)
    : std::runtime_error(summarize(problems)), problems_(std::move(problems)) {}

Scenario parse_scenario(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    throw ScenarioError({std::string("syntax: ") + e.what()});
  }
  if (!root.IsMap()) throw ScenarioError({"document: must be a mapping"});

  Reader r;
  Scenario s;
  r.unknown_keys(root, "", {"name", "models", "distribution", "quadrature", "opp", "sweep"});
  s.name = r.text(root, "", "name", false).value_or("");
  read_models(r, root, s);
  read_distribution(r, root, s);
  read_settings(r, root, s);
  if (!r.problems.empty()) throw ScenarioError(std::move(r.problems));
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError({"file: cannot open '" + path.string() + "'"});
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace promptpricing::cli
