#include <cmath>

#include "promptpricing/heterogeneous.hpp"

namespace promptpricing {

PriceBound price_upper_bound(const GaiModel& model, const GaiModel& alternative,
                             double alternative_price, Ambiguity eps) {
  if (!(alternative_price > 0.0)) {
    throw Error(ErrorCode::InvalidPrice, "preference bound needs a positive alternative price");
  }
  const std::int64_t n = optimal_prompt_count(alternative, alternative_price, eps).value();
  const double alternative_payoff =
      n > 0 ? user_payoff(alternative, alternative_price, eps, n) : 0.0;
  const double e = eps.value();
  return detail::preference_bound(e, model.utility(), alternative_payoff, [e](std::int64_t k) {
    return std::pow(e, static_cast<double>(k));
  });
}

}  // namespace promptpricing
