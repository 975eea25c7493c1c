#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "promptpricing/core.hpp"
#include "promptpricing/numeric.hpp"

using namespace promptpricing;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected promptpricing::Error");
  return ErrorCode::ConfigError;
}

}  // namespace

TEST_CASE("model validation") {
  CHECK_NOTHROW(GaiModel("a", 1.0, 0.0));
  CHECK(code_of([] { GaiModel("", 1.0, 0.1); }) == ErrorCode::InvalidModel);
  CHECK(code_of([] { GaiModel("a", 0.0, 0.1); }) == ErrorCode::InvalidModel);
  CHECK(code_of([] { GaiModel("a", 1.0, -0.1); }) == ErrorCode::InvalidModel);
  CHECK(code_of([] { GaiModel("a", NAN, 0.1); }) == ErrorCode::InvalidModel);
}

TEST_CASE("model set invariants") {
  CHECK(code_of([] { ModelSet({}); }) == ErrorCode::InvalidModelSet);
  CHECK(code_of([] { ModelSet({GaiModel("a", 1, 0), GaiModel("a", 2, 0)}); }) ==
        ErrorCode::InvalidModelSet);
  CHECK(code_of([] { ModelSet({GaiModel("h", 2, 0), GaiModel("l", 1, 0)}); }) ==
        ErrorCode::InvalidModelSet);

  const ModelSet pair({GaiModel("L", 1.0, 0.02), GaiModel("H", 1.8, 0.04)});
  CHECK(pair.is_pair());
  CHECK(pair.low().id() == "L");
  CHECK(pair.high().id() == "H");
  CHECK(pair.index_of("H") == 1u);
  CHECK_FALSE(pair.index_of("X").has_value());

  const ModelSet single({GaiModel("m", 1.0, 0.0)});
  CHECK(code_of([&] { (void)single.low(); }) == ErrorCode::ConfigError);
  // Three models need no ordering.
  CHECK_NOTHROW(ModelSet({GaiModel("a", 1, 0), GaiModel("b", 1, 0), GaiModel("c", 1, 0)}));
}

TEST_CASE("price schedule") {
  const ModelSet models({GaiModel("L", 1.0, 0.0), GaiModel("H", 2.0, 0.0)});
  PriceSchedule s;
  s.set("H", 0.7);
  CHECK(s.contains("H"));
  CHECK(code_of([&] { (void)s.price_of("L"); }) == ErrorCode::SchedulePriceMissing);
  CHECK(code_of([&] { (void)s.aligned_to(models); }) == ErrorCode::SchedulePriceMissing);
  CHECK(code_of([&] { s.set("L", -1.0); }) == ErrorCode::InvalidPrice);
  s.set("L", 0.3);
  CHECK(s.aligned_to(models) == std::vector<double>{0.3, 0.7});
  const double prices[] = {0.1, 0.2};
  CHECK(PriceSchedule::from_aligned(models, prices).price_of("H") == 0.2);
}

TEST_CASE("ambiguity bounds") {
  CHECK_NOTHROW(Ambiguity(0.5));
  CHECK(code_of([] { Ambiguity(0.0); }) == ErrorCode::InvalidAmbiguity);
  CHECK(code_of([] { Ambiguity(1.0); }) == ErrorCode::InvalidAmbiguity);
}

TEST_CASE("uniform distribution") {
  const auto d = AmbiguityDistribution::uniform(0.2, 0.8);
  CHECK(d.density(0.5) == doctest::Approx(1.0 / 0.6));
  CHECK(d.density(0.1) == 0.0);
  CHECK(d.cdf(0.5) == doctest::Approx(0.5));
  CHECK(d.mass(0.2, 0.8) == doctest::Approx(1.0));
  CHECK(code_of([] { AmbiguityDistribution::uniform(0.5, 0.5); }) ==
        ErrorCode::InvalidDistribution);
  CHECK(code_of([] { AmbiguityDistribution::uniform(-0.1, 0.5); }) ==
        ErrorCode::InvalidDistribution);
}

TEST_CASE("tabulated distribution is renormalised piecewise-linear") {
  // Triangle on [0, 1] peaking at 0.5; given unnormalised heights.
  const auto d = AmbiguityDistribution::tabulated({0.0, 0.5, 1.0}, {0.0, 4.0, 0.0});
  CHECK(d.density(0.5) == doctest::Approx(2.0));
  CHECK(d.density(0.25) == doctest::Approx(1.0));
  CHECK(d.cdf(0.5) == doctest::Approx(0.5));
  CHECK(d.cdf(0.25) == doctest::Approx(0.125));
  CHECK(code_of([] { AmbiguityDistribution::tabulated({0.0, 0.5}, {1.0}); }) ==
        ErrorCode::InvalidDistribution);
  CHECK(code_of([] { AmbiguityDistribution::tabulated({0.5, 0.2}, {1.0, 1.0}); }) ==
        ErrorCode::InvalidDistribution);
  CHECK(code_of([] { AmbiguityDistribution::tabulated({0.0, 1.0}, {-1.0, 1.0}); }) ==
        ErrorCode::InvalidDistribution);
  CHECK(code_of([] { AmbiguityDistribution::tabulated({0.0, 1.0}, {0.0, 0.0}); }) ==
        ErrorCode::InvalidDistribution);
}

TEST_CASE("quadrature nodes avoid the endpoints") {
  const auto d = AmbiguityDistribution::uniform(0.0, 1.0);
  const auto nodes = quadrature_nodes(d, QuadratureConfig{});
  CHECK(nodes.size() == 2001);
  CHECK(nodes.front().eps > 0.0);
  CHECK(nodes.back().eps < 1.0);
  CHECK(code_of([] { QuadratureConfig{2}.validate(); }) == ErrorCode::InvalidQuadrature);
}

TEST_CASE("integrate") {
  const QuadratureConfig quad;
  const auto u01 = AmbiguityDistribution::uniform(0.0, 1.0);
  CHECK(integrate([](double) { return 1.0; }, u01, quad) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(integrate([](double e) { return e; }, u01, quad) == doctest::Approx(0.5).epsilon(1e-6));
  // Oracle: (0.8^3 - 0.2^3) / 3 / 0.6
  const auto u28 = AmbiguityDistribution::uniform(0.2, 0.8);
  CHECK(std::abs(integrate([](double e) { return e * e; }, u28, quad) - 0.28) < 1e-6);
  CHECK(code_of([&] { integrate([](double) { return NAN; }, u01, quad); }) ==
        ErrorCode::NonFiniteValue);
}

TEST_CASE("bracketed root") {
  CHECK(find_root_bracketed([](double x) { return x - 0.5; }, 0.0, 1.0, 1e-12) ==
        doctest::Approx(0.5).epsilon(1e-12));
  const auto g = [](double e) { return e * (1.0 - e) - 0.1; };
  // Oracle: (1 -+ sqrt(0.6)) / 2
  CHECK(std::abs(find_root_bracketed(g, 0.0, 0.5, 1e-12) - 0.1127016653792583) < 1e-10);
  CHECK(std::abs(find_root_bracketed(g, 0.5, 1.0, 1e-12) - 0.8872983346207417) < 1e-10);
  CHECK(code_of([] { find_root_bracketed([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-9); }) ==
        ErrorCode::NoBracket);
}

TEST_CASE("golden section") {
  const auto m = golden_section_maximize([](double x) { return -(x - 0.3) * (x - 0.3); }, 0.0, 1.0,
                                         1e-10);
  CHECK(m.x == doctest::Approx(0.3).epsilon(1e-6));
  // Maximum at an endpoint is still found.
  CHECK(golden_section_maximize([](double x) { return x; }, 0.0, 1.0, 1e-10).x == 1.0);
}
