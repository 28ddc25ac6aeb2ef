#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "twobridge/config.hpp"
#include "twobridge/numeric.hpp"
#include "twobridge/riley.hpp"

namespace twobridge {

/// A numeric point of the character variety: |phi_w(d, u)| below the
/// character tolerance, d away from 0 and +-1.
struct CharacterPoint {
  std::complex<double> d;
  std::complex<double> u;
  double residual = 0.0;
};

/// Validates the CharacterPoint invariants; `fiber_scale` is the maximum
/// coefficient magnitude of phi_w(d, .).
CharacterPoint make_character_point(const RileyData& data, std::complex<double> d,
                                    std::complex<double> u, double fiber_scale,
                                    const Tolerances& tol);

struct GenericityFlags {
  double min_root_gap = 0.0;
  double min_dphi_dm = 0.0;
  double min_dphi_du = 0.0;
  double min_w11 = 0.0;
  double min_v11phiv = 0.0;
};

struct TorsionReport {
  SchubertForm form;
  std::complex<double> c;
  std::complex<double> d;
  std::vector<CharacterPoint> points;
  std::vector<std::complex<double>> torsions;
  std::complex<double> inverse_sum;
  double inverse_magnitude_sum = 0.0;
  double relative_residual = 0.0;  // |inverse_sum| / sum|1/T|, 0 when the sum is 0
  GenericityFlags flags;
};

/// Closed-form adjoint torsion at one character, "+" sign convention:
///   T = m^{eps_k + 1} / (2 (m^2 - 1)) * w11 / (v11 phi_v) * dphi_w/du.
/// Throws DegeneratePoint when any denominator magnitude is under
/// tol.degeneracy.
std::complex<double> torsion_at(const RileyData& data, const CharacterPoint& pt,
                                const Tolerances& tol);

struct TracePreimage {
  std::complex<double> d;
  std::vector<CharacterPoint> points;
};

/// Solves d + d^{-1} = c (branch |d| >= 1) and returns all fiber roots as
/// character points. Throws NonGenericTrace for c near +-2 or a degree drop.
TracePreimage trace_preimage(const RileyData& data, std::complex<double> c,
                             const Tolerances& tol, Precision precision = Precision::standard);

TorsionReport torsion_spectrum(const RileyData& data, std::complex<double> c,
                               const Tolerances& tol, Precision precision = Precision::standard);

struct StatisticsOptions {
  bool has_pinned_c = false;
  std::complex<double> pinned_c{0.0, 0.0};
  bool resample_on_reject = false;
};

struct SumStatistics {
  int trials = 0;
  int retries = 0;
  double max_rel_residual = 0.0;
  double median_rel_residual = 0.0;
  // Torus knots only: max |inverse_sum - (-2q)| / |2q| over trials.
  double max_target_deviation = 0.0;
  std::vector<TorsionReport> reports;
};

SumStatistics inverse_sum_statistics(const RileyData& data, int trials, std::uint64_t seed,
                                     const Tolerances& tol,
                                     Precision precision = Precision::standard,
                                     const StatisticsOptions& options = {});

}  // namespace twobridge
