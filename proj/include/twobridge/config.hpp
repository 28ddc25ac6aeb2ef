#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "twobridge/errors.hpp"

namespace twobridge {

enum class Precision { standard, extended };

inline const char* precision_name(Precision p) {
  return p == Precision::standard ? "standard" : "extended";
}

inline Precision precision_from_name(const std::string& name) {
  if (name == "standard") return Precision::standard;
  if (name == "extended") return Precision::extended;
  raise(ErrorCode::invalid_argument, "unknown precision mode '" + name + "'");
}

/// Every numeric threshold of the engine lives here so that runs are
/// auditable and reproducible. Values can be overridden by name through the
/// CLI (`--tolerance name=value`) or the C API.
struct Tolerances {
  // |phi_w(d,u)| <= character_residual_factor * max|fiber coefficient| for a
  // valid character point.
  double character_residual_factor = 1e-10;
  // Lower bound on |w11|, |v11 phi_v|, |dphi/du|, |dphi/dm| at a point.
  double degeneracy = 1e-8;
  // Minimum pairwise distance between fiber roots.
  double root_gap = 1e-6;
  // Minimum magnitude of the fiber polynomial's constant term.
  double constant_term = 1e-10;
  // Annulus for sampling |d|.
  double annulus_min = 1.2;
  double annulus_max = 4.0;
  // Lower bound on |d^2 - 1| when sampling.
  double unit_circle_margin = 1e-3;
  // Lower bound on |c -+ 2| (and |d -+ 1|) for user-pinned trace values.
  double trace_margin = 1e-6;
  // Vanishing identity: |sum 1/T| <= vanishing_rel * sum|1/T| (hyperbolic).
  double vanishing_rel = 1e-7;
  // Torus knots: |sum 1/T + 2q| <= torus_rel * |2q|.
  double torus_rel = 1e-8;
  // Formula/oracle agreement: | |oracle|/|formula| - 1 | <= oracle_rel.
  double oracle_rel = 1e-8;
  // Root finder: max |f(root)| / max|coefficient| after polishing.
  double backward_error = 1e-10;
  // Transition matrix is singular when |det| / Hadamard bound < this.
  double singular_ratio = 1e-10;
  // Rank cutoff: singular values below svd_rel * sigma_max count as zero.
  double svd_rel = 1e-8;
  // h1 must sit at least this far (relative) from the column space of delta0.
  double coboundary_distance = 1e-6;
  // Redraw budget inside sample_generic.
  int sample_budget = 100;
  // Resampling budget per trial in inverse_sum_statistics.
  int retry_budget = 20;

  void set(const std::string& name, double value);
  double get(const std::string& name) const;
  static const std::map<std::string, double Tolerances::*>& registry();
};

/// One CLI/C-API run: tolerance overrides, RNG seed, trial count, precision.
struct RunConfig {
  Tolerances tol;
  Precision precision = Precision::standard;
  std::uint64_t seed = 1;
  int trials = 20;
  bool has_pinned_c = false;
  std::complex<double> pinned_c{0.0, 0.0};
  bool resample_on_reject = false;

  void validate() const {
    if (trials < 1) raise(ErrorCode::invalid_argument, "trials must be >= 1");
  }
};

}  // namespace twobridge
