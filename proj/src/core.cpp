#include "promptpricing/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace promptpricing {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::InvalidModelSet: return "InvalidModelSet";
    case ErrorCode::InvalidPrice: return "InvalidPrice";
    case ErrorCode::SchedulePriceMissing: return "SchedulePriceMissing";
    case ErrorCode::InvalidAmbiguity: return "InvalidAmbiguity";
    case ErrorCode::InvalidDistribution: return "InvalidDistribution";
    case ErrorCode::InvalidQuadrature: return "InvalidQuadrature";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::NoBracket: return "NoBracket";
    case ErrorCode::UnboundedDemand: return "UnboundedDemand";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::DegenerateCostBase: return "DegenerateCostBase";
  }
  return "Unknown";
}

GaiModel::GaiModel(std::string id, double utility, double cost)
    : id_(std::move(id)), utility_(utility), cost_(cost) {
  if (id_.empty()) throw Error(ErrorCode::InvalidModel, "model id must be non-empty");
  if (!std::isfinite(utility_) || utility_ <= 0.0) {
    throw Error(ErrorCode::InvalidModel, "model '" + id_ + "': utility must be finite and > 0");
  }
  if (!std::isfinite(cost_) || cost_ < 0.0) {
    throw Error(ErrorCode::InvalidModel, "model '" + id_ + "': cost must be finite and >= 0");
  }
}

ModelSet::ModelSet(std::vector<GaiModel> models) : models_(std::move(models)) {
  if (models_.empty()) throw Error(ErrorCode::InvalidModelSet, "model set is empty");
  std::set<std::string_view> seen;
  for (const auto& m : models_) {
    if (!seen.insert(m.id()).second) {
      throw Error(ErrorCode::InvalidModelSet, "duplicate model id '" + m.id() + "'");
    }
  }
  if (models_.size() == 2 && !(models_[0].utility() < models_[1].utility())) {
    throw Error(ErrorCode::InvalidModelSet,
                "two-model set must list the low-utility model first (U_L < U_H)");
  }
}

std::optional<std::size_t> ModelSet::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < models_.size(); ++i) {
    if (models_[i].id() == id) return i;
  }
  return std::nullopt;
}

const GaiModel& ModelSet::low() const {
  if (!is_pair()) throw Error(ErrorCode::ConfigError, "expected exactly two models");
  return models_[0];
}

const GaiModel& ModelSet::high() const {
  if (!is_pair()) throw Error(ErrorCode::ConfigError, "expected exactly two models");
  return models_[1];
}

void PriceSchedule::set(const std::string& id, double price) {
  if (!std::isfinite(price) || price < 0.0) {
    std::ostringstream msg;
    msg << "price for '" << id << "' must be finite and >= 0, got " << price;
    throw Error(ErrorCode::InvalidPrice, msg.str());
  }
  prices_[id] = price;
}

bool PriceSchedule::contains(std::string_view id) const { return prices_.find(id) != prices_.end(); }

double PriceSchedule::price_of(std::string_view id) const {
  const auto it = prices_.find(id);
  if (it == prices_.end()) {
    throw Error(ErrorCode::SchedulePriceMissing, "no price for model '" + std::string(id) + "'");
  }
  return it->second;
}

std::vector<double> PriceSchedule::aligned_to(const ModelSet& models) const {
  std::vector<double> out;
  out.reserve(models.size());
  for (const auto& m : models) out.push_back(price_of(m.id()));
  return out;
}

PriceSchedule PriceSchedule::from_aligned(const ModelSet& models, std::span<const double> prices) {
  PriceSchedule schedule;
  for (std::size_t i = 0; i < models.size(); ++i) schedule.set(models[i].id(), prices[i]);
  return schedule;
}

Ambiguity::Ambiguity(double value) : value_(value) {
  if (!(value > 0.0 && value < 1.0)) {
    std::ostringstream msg;
    msg << "ambiguity must lie strictly inside (0, 1), got " << value;
    throw Error(ErrorCode::InvalidAmbiguity, msg.str());
  }
}

AmbiguityDistribution AmbiguityDistribution::uniform(double eps_min, double eps_max) {
  if (!(eps_min >= 0.0 && eps_max <= 1.0 && eps_min < eps_max)) {
    std::ostringstream msg;
    msg << "uniform support must satisfy 0 <= min < max <= 1, got [" << eps_min << ", " << eps_max
        << "]";
    throw Error(ErrorCode::InvalidDistribution, msg.str());
  }
  const double height = 1.0 / (eps_max - eps_min);
  return AmbiguityDistribution(Kind::Uniform, {eps_min, eps_max}, {height, height});
}

AmbiguityDistribution AmbiguityDistribution::tabulated(std::vector<double> knots,
                                                       std::vector<double> values) {
  if (knots.size() < 2 || knots.size() != values.size()) {
    throw Error(ErrorCode::InvalidDistribution,
                "tabulated density needs >= 2 knots and one value per knot");
  }
  if (knots.front() < 0.0 || knots.back() > 1.0) {
    throw Error(ErrorCode::InvalidDistribution, "tabulated knots must lie in [0, 1]");
  }
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i] > knots[i - 1])) {
      throw Error(ErrorCode::InvalidDistribution, "tabulated knots must be strictly ascending");
    }
  }
  double area = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0) {
      throw Error(ErrorCode::InvalidDistribution, "tabulated density values must be finite and >= 0");
    }
    if (i > 0) area += 0.5 * (values[i] + values[i - 1]) * (knots[i] - knots[i - 1]);
  }
  if (!(area > 0.0)) throw Error(ErrorCode::InvalidDistribution, "tabulated density has zero mass");
  for (auto& v : values) v /= area;
  return AmbiguityDistribution(Kind::Tabulated, std::move(knots), std::move(values));
}

AmbiguityDistribution::AmbiguityDistribution(Kind kind, std::vector<double> knots,
                                             std::vector<double> values)
    : kind_(kind), knots_(std::move(knots)), values_(std::move(values)) {
  cumulative_.resize(knots_.size(), 0.0);
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    cumulative_[i] =
        cumulative_[i - 1] + 0.5 * (values_[i] + values_[i - 1]) * (knots_[i] - knots_[i - 1]);
  }
}

double AmbiguityDistribution::density(double eps) const {
  if (eps < knots_.front() || eps > knots_.back()) return 0.0;
  if (kind_ == Kind::Uniform) return values_.front();
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), eps);
  if (it == knots_.end()) return values_.back();
  const std::size_t hi = static_cast<std::size_t>(it - knots_.begin());
  const std::size_t lo = hi - 1;
  const double t = (eps - knots_[lo]) / (knots_[hi] - knots_[lo]);
  return values_[lo] + t * (values_[hi] - values_[lo]);
}

double AmbiguityDistribution::cdf(double eps) const {
  if (eps <= knots_.front()) return 0.0;
  if (eps >= knots_.back()) return 1.0;
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), eps);
  const std::size_t hi = static_cast<std::size_t>(it - knots_.begin());
  const std::size_t lo = hi - 1;
  const double width = eps - knots_[lo];
  const double slope = (values_[hi] - values_[lo]) / (knots_[hi] - knots_[lo]);
  return cumulative_[lo] + values_[lo] * width + 0.5 * slope * width * width;
}

void QuadratureConfig::validate() const {
  if (node_count < 3) {
    throw Error(ErrorCode::InvalidQuadrature, "quadrature node_count must be >= 3");
  }
}

std::vector<QuadratureNode> quadrature_nodes(const AmbiguityDistribution& dist,
                                             const QuadratureConfig& quad) {
  quad.validate();
  const double lo = dist.support_min();
  const double width = (dist.support_max() - lo) / static_cast<double>(quad.node_count);
  std::vector<QuadratureNode> nodes;
  nodes.reserve(quad.node_count);
  for (std::size_t i = 0; i < quad.node_count; ++i) {
    const double eps = lo + (static_cast<double>(i) + 0.5) * width;
    nodes.push_back({eps, dist.density(eps) * width});
  }
  return nodes;
}

}  // namespace promptpricing
