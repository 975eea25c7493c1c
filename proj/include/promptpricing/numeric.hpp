#pragma once

#include <cmath>
#include <concepts>
#include <sstream>
#include <vector>

#include "promptpricing/core.hpp"

namespace promptpricing {

/// Sum of f(eps_i) * weight_i over the midpoint nodes of `dist`.
template <std::invocable<double> F>
double integrate(F&& f, const std::vector<QuadratureNode>& nodes) {
  double total = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double value = f(nodes[i].eps);
    if (!std::isfinite(value)) {
      std::ostringstream msg;
      msg << "integrand is " << value << " at node " << i << " (eps = " << nodes[i].eps << ")";
      throw Error(ErrorCode::NonFiniteValue, msg.str());
    }
    total += value * nodes[i].weight;
  }
  return total;
}

template <std::invocable<double> F>
double integrate(F&& f, const AmbiguityDistribution& dist, const QuadratureConfig& quad) {
  return integrate(std::forward<F>(f), quadrature_nodes(dist, quad));
}

/// Bisection on a sign-changing bracket. Stops once |g(x)| < tol or the
/// bracket is narrower than tol; the result always lies in [lo, hi].
template <std::invocable<double> G>
double find_root_bracketed(G&& g, double lo, double hi, double tol) {
  double g_lo = g(lo);
  const double g_hi = g(hi);
  if (g_lo == 0.0) return lo;
  if (g_hi == 0.0) return hi;
  if (!std::isfinite(g_lo) || !std::isfinite(g_hi) || (g_lo > 0.0) == (g_hi > 0.0)) {
    std::ostringstream msg;
    msg << "no sign change on [" << lo << ", " << hi << "]: g(lo) = " << g_lo
        << ", g(hi) = " << g_hi;
    throw Error(ErrorCode::NoBracket, msg.str());
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double g_mid = g(mid);
    if (std::abs(g_mid) < tol || hi - lo < tol) return mid;
    if ((g_mid > 0.0) == (g_lo > 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct Maximum {
  double x;
  double value;
};

/// Golden-section search for a maximum of f on [lo, hi]. Exact for
/// unimodal f; otherwise returns a local maximum. The endpoints are
/// compared against the interior result so a monotone f is handled.
template <std::invocable<double> F>
Maximum golden_section_maximize(F&& f, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  Maximum best = fc >= fd ? Maximum{c, fc} : Maximum{d, fd};
  for (const double x : {lo, hi}) {
    const double fx = f(x);
    if (fx > best.value) best = {x, fx};
  }
  return best;
}

}  // namespace promptpricing
