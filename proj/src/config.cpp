#include "twobridge/config.hpp"

namespace twobridge {

const std::map<std::string, double Tolerances::*>& Tolerances::registry() {
  static const std::map<std::string, double Tolerances::*> reg = {
      {"character_residual_factor", &Tolerances::character_residual_factor},
      {"degeneracy", &Tolerances::degeneracy},
      {"root_gap", &Tolerances::root_gap},
      {"constant_term", &Tolerances::constant_term},
      {"annulus_min", &Tolerances::annulus_min},
      {"annulus_max", &Tolerances::annulus_max},
      {"unit_circle_margin", &Tolerances::unit_circle_margin},
      {"trace_margin", &Tolerances::trace_margin},
      {"vanishing_rel", &Tolerances::vanishing_rel},
      {"torus_rel", &Tolerances::torus_rel},
      {"oracle_rel", &Tolerances::oracle_rel},
      {"backward_error", &Tolerances::backward_error},
      {"singular_ratio", &Tolerances::singular_ratio},
      {"svd_rel", &Tolerances::svd_rel},
      {"coboundary_distance", &Tolerances::coboundary_distance},
  };
  return reg;
}

void Tolerances::set(const std::string& name, double value) {
  if (name == "sample_budget" || name == "retry_budget") {
    if (value < 1) raise(ErrorCode::invalid_argument, name + " must be >= 1");
    (name == "sample_budget" ? sample_budget : retry_budget) = static_cast<int>(value);
    return;
  }
  auto it = registry().find(name);
  if (it == registry().end())
    raise(ErrorCode::invalid_argument, "unknown tolerance '" + name + "'");
  if (!(value > 0)) raise(ErrorCode::invalid_argument, "tolerance '" + name + "' must be positive");
  this->*(it->second) = value;
}

double Tolerances::get(const std::string& name) const {
  if (name == "sample_budget") return sample_budget;
  if (name == "retry_budget") return retry_budget;
  auto it = registry().find(name);
  if (it == registry().end())
    raise(ErrorCode::invalid_argument, "unknown tolerance '" + name + "'");
  return this->*(it->second);
}

}  // namespace twobridge
