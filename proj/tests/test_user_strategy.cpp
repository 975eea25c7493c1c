#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "promptpricing/user_strategy.hpp"
#include "support.hpp"

using namespace promptpricing;
using testsupport::brute_prompt_count;

namespace {

PromptCount count(double u, double p, double eps) {
  return optimal_prompt_count(GaiModel("m", u, 0.0), p, Ambiguity(eps));
}

PriceSchedule prices(std::initializer_list<std::pair<const char*, double>> list) {
  PriceSchedule s;
  for (const auto& [id, p] : list) s.set(id, p);
  return s;
}

}  // namespace

TEST_CASE("optimal prompt count") {
  CHECK(count(1.0, 1.5, 0.5) == PromptCount(0));
  CHECK(count(1.0, 0.1, 0.5) == PromptCount(3));  // brute-force oracle
  CHECK(count(1.0, 0.0, 0.7).is_unbounded());
  // At p = (1 - eps) U the user is indifferent between 0 and 1 prompt;
  // the smaller count wins.
  CHECK(count(1.0, 0.5, 0.5) == PromptCount(0));
  CHECK(count(1.0, 0.5 - 1e-9, 0.5) == PromptCount(1));
  CHECK_THROWS_AS(count(1.0, -0.1, 0.5), Error);
}

TEST_CASE("optimal prompt count matches enumeration on a coarse grid") {
  for (const double u : {0.5, 2.0}) {
    for (int i = 1; i <= 30; ++i) {
      for (int j = 1; j <= 19; ++j) {
        const double p = u * i * 0.04;
        const double eps = j * 0.05;
        CAPTURE(u);
        CAPTURE(p);
        CAPTURE(eps);
        CHECK(count(u, p, eps).value() == brute_prompt_count(u, p, eps));
      }
    }
  }
}

TEST_CASE("user payoff") {
  const GaiModel m("m", 1.0, 0.0);
  CHECK(user_payoff(m, 0.3, Ambiguity(0.4), 0) == 0.0);
  CHECK(user_payoff(m, 0.1, Ambiguity(0.5), 3) == doctest::Approx(0.575));
  CHECK(user_payoff(GaiModel("m", 2.0, 0.0), 0.5, Ambiguity(0.9), 1) == doctest::Approx(-0.3));
}

TEST_CASE("model selection") {
  const ModelSet single({GaiModel("m", 1.0, 0.0)});
  const auto none = select_model(single, prices({{"m", 1.5}}), Ambiguity(0.3));
  CHECK_FALSE(none.selected_model.has_value());
  CHECK(none.prompt_count == PromptCount(0));
  CHECK(none.payoff == 0.0);

  const ModelSet pair({GaiModel("L", 1.0, 0.0), GaiModel("H", 1.8, 0.0)});
  // Oracle: L earns 0 (indifferent at n = 0), H earns 0.4 with one prompt.
  const auto a = select_model(pair, prices({{"L", 0.5}, {"H", 0.5}}), Ambiguity(0.5));
  CHECK(a.selected_model == "H");
  CHECK(a.payoff == doctest::Approx(0.4));
  // Oracle: L earns 0.7375 with four prompts, H is priced above (1 - eps) U_H.
  const auto b = select_model(pair, prices({{"L", 0.05}, {"H", 1.0}}), Ambiguity(0.5));
  CHECK(b.selected_model == "L");
  CHECK(b.prompt_count == PromptCount(4));
  CHECK(b.payoff == doctest::Approx(0.7375));

  CHECK_THROWS_AS(select_model(pair, prices({{"L", 0.5}}), Ambiguity(0.5)), Error);
}

TEST_CASE("model selection tie-breaks") {
  // Every model priced out: no purchase rather than a zero-count pick.
  const ModelSet pair({GaiModel("L", 1.0, 0.0), GaiModel("H", 2.0, 0.0)});
  const auto d = select_model(pair, prices({{"L", 2.0}, {"H", 3.0}}), Ambiguity(0.5));
  CHECK_FALSE(d.selected_model.has_value());
  // Identical models: lower id wins.
  const ModelSet twins({GaiModel("b", 1.0, 0.0), GaiModel("a", 1.0, 0.0), GaiModel("c", 1.0, 0.0)});
  const auto t = select_model(twins, prices({{"a", 0.1}, {"b", 0.1}, {"c", 0.1}}), Ambiguity(0.5));
  CHECK(t.selected_model == "a");
  // A zero price gives payoff U with unbounded prompting.
  const auto z = select_model(ModelSet({GaiModel("m", 1.0, 0.0)}), prices({{"m", 0.0}}), Ambiguity(0.5));
  CHECK(z.prompt_count.is_unbounded());
  CHECK(z.payoff == 1.0);
}

TEST_CASE("optimal user payoff") {
  const ModelSet single({GaiModel("m", 1.0, 0.0)});
  CHECK(optimal_user_payoff(single, prices({{"m", 1.0}}), Ambiguity(0.4)) == 0.0);
  CHECK(optimal_user_payoff(single, prices({{"m", 0.1}}), Ambiguity(0.5)) == doctest::Approx(0.575));
  CHECK(optimal_user_payoff(single, prices({{"m", 0.1}}), Ambiguity(0.3)) >=
        optimal_user_payoff(single, prices({{"m", 0.1}}), Ambiguity(0.6)));
}

TEST_CASE("prompt upper bound") {
  const GaiModel m("m", 1.0, 0.0);
  CHECK(prompt_upper_bound(m, 0.5) == 1);
  CHECK(prompt_upper_bound(m, 0.25) == 2);
  CHECK(prompt_upper_bound(m, 0.9) == 1);
  CHECK_THROWS_AS(prompt_upper_bound(m, 0.0), Error);
  for (const double p : {0.01, 0.03, 0.07, 0.2}) {
    for (int j = 1; j <= 99; ++j) {
      CHECK(count(1.0, p, j / 100.0).value() <= prompt_upper_bound(m, p));
    }
  }
}

TEST_CASE("prompt shape classification") {
  const GaiModel m("m", 1.0, 0.0);
  CHECK(classify_prompt_shape(m, 0.0) == PromptShape::AlwaysInfinite);
  CHECK(classify_prompt_shape(m, 0.2) == PromptShape::InverseUShaped);
  CHECK(classify_prompt_shape(m, 0.25) == PromptShape::InverseUShaped);
  CHECK(classify_prompt_shape(m, 0.6) == PromptShape::Decreasing);
  CHECK(classify_prompt_shape(m, 1.0) == PromptShape::AlwaysZero);
  CHECK(to_string(PromptShape::InverseUShaped) == "inverse_u");
}

TEST_CASE("prompt count shape follows the classification") {
  const GaiModel m("m", 1.0, 0.0);
  for (const double p : {0.05, 0.2, 0.4, 0.8}) {
    std::vector<std::int64_t> seq;
    for (int j = 1; j <= 999; ++j) seq.push_back(count(1.0, p, j / 1000.0).value());
    if (classify_prompt_shape(m, p) == PromptShape::InverseUShaped) {
      CHECK(testsupport::is_unimodal(seq));
    } else {
      CHECK(testsupport::is_non_increasing(seq));
    }
  }
}
