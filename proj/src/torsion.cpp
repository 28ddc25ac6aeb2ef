#include "twobridge/torsion.hpp"

#include <algorithm>
#include <cmath>

namespace twobridge {

namespace {

template <class R>
std::complex<R> widen(std::complex<double> z) {
  return std::complex<R>(static_cast<R>(z.real()), static_cast<R>(z.imag()));
}

std::complex<double> narrow(std::complex<double> z) { return z; }
std::complex<double> narrow(std::complex<long double> z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

template <class R>
std::complex<R> torsion_value(const RileyData& data, std::complex<R> d, std::complex<R> u,
                              const Tolerances& tol) {
  using C = std::complex<R>;
  const C w11 = data.rho_w.a11.eval_mu(d, u);
  const C v11_phi_v = data.v11_phi_v.eval_mu(d, u);
  const C dphi_du = data.dphi_du.eval_mu(d, u);
  const C dphi_dm = data.dphi_dm.eval_mu(d, u);
  const R floor = static_cast<R>(tol.degeneracy);
  if (std::abs(w11) < floor || std::abs(v11_phi_v) < floor || std::abs(dphi_du) < floor ||
      std::abs(dphi_dm) < floor)
    raise(ErrorCode::degenerate_point,
          "a torsion denominator or partial derivative is under the degeneracy tolerance");
  const C m_power = powi(d, data.eps_k + 1);
  return m_power / (R(2) * (d * d - C(R(1), R(0)))) * w11 / v11_phi_v * dphi_du;
}

template <class R>
TorsionReport spectrum_impl(const RileyData& data, std::complex<double> c,
                            const Tolerances& tol) {
  using C = std::complex<R>;
  if (std::abs(c - 2.0) < tol.trace_margin || std::abs(c + 2.0) < tol.trace_margin)
    raise(ErrorCode::non_generic_trace, "trace value too close to +-2");

  const C cw = widen<R>(c);
  const C disc = std::sqrt(cw * cw - C(R(4), R(0)));
  const C d1 = (cw + disc) / R(2);
  const C d2 = (cw - disc) / R(2);
  C d = std::abs(d1) >= std::abs(d2) ? d1 : d2;
  if (std::abs(d1) == std::abs(d2))
    d = (d1.real() != d2.real() ? d1.real() > d2.real() : d1.imag() > d2.imag()) ? d1 : d2;

  FiberData<R> fiber;
  try {
    fiber = analyze_fiber<R>(data, d, tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::degree_collapse)
      raise(ErrorCode::non_generic_trace, "fiber polynomial degree drop");
    throw;
  }

  TorsionReport report;
  report.form = data.form;
  report.c = c;
  report.d = narrow(d);
  const double fiber_scale = static_cast<double>(fiber.fiber.coefficient_scale());
  report.flags = GenericityFlags{static_cast<double>(fiber.roots.min_gap),
                                 static_cast<double>(fiber.min_dphi_dm),
                                 static_cast<double>(fiber.min_dphi_du),
                                 static_cast<double>(fiber.min_w11),
                                 static_cast<double>(fiber.min_v11phiv)};

  C inverse_sum{};
  R magnitude_sum(0);
  for (const auto& u : fiber.roots.roots) {
    report.points.push_back(
        make_character_point(data, narrow(d), narrow(u), fiber_scale, tol));
    const C value = torsion_value<R>(data, d, u, tol);
    report.torsions.push_back(narrow(value));
    const C inv = C(R(1), R(0)) / value;
    inverse_sum += inv;
    magnitude_sum += std::abs(inv);
  }
  report.inverse_sum = narrow(inverse_sum);
  report.inverse_magnitude_sum = static_cast<double>(magnitude_sum);
  report.relative_residual =
      magnitude_sum == R(0)
          ? 0.0
          : static_cast<double>(std::abs(inverse_sum) / magnitude_sum);
  return report;
}

}  // namespace

CharacterPoint make_character_point(const RileyData& data, std::complex<double> d,
                                    std::complex<double> u, double fiber_scale,
                                    const Tolerances& tol) {
  if (std::abs(d) == 0.0) raise(ErrorCode::degenerate_point, "d must be nonzero");
  if (std::abs(d - 1.0) < tol.trace_margin || std::abs(d + 1.0) < tol.trace_margin)
    raise(ErrorCode::degenerate_point, "d too close to +-1");
  CharacterPoint pt{d, u, std::abs(data.phi_w.eval_mu(d, u))};
  if (!(pt.residual <= tol.character_residual_factor * fiber_scale))
    raise(ErrorCode::no_convergence, "character residual above tolerance");
  return pt;
}

std::complex<double> torsion_at(const RileyData& data, const CharacterPoint& pt,
                                const Tolerances& tol) {
  return torsion_value<double>(data, pt.d, pt.u, tol);
}

TracePreimage trace_preimage(const RileyData& data, std::complex<double> c,
                             const Tolerances& tol, Precision precision) {
  const TorsionReport report = precision == Precision::standard
                                   ? spectrum_impl<double>(data, c, tol)
                                   : spectrum_impl<long double>(data, c, tol);
  return TracePreimage{report.d, report.points};
}

TorsionReport torsion_spectrum(const RileyData& data, std::complex<double> c,
                               const Tolerances& tol, Precision precision) {
  return precision == Precision::standard ? spectrum_impl<double>(data, c, tol)
                                          : spectrum_impl<long double>(data, c, tol);
}

SumStatistics inverse_sum_statistics(const RileyData& data, int trials, std::uint64_t seed,
                                     const Tolerances& tol, Precision precision,
                                     const StatisticsOptions& options) {
  if (trials < 1) raise(ErrorCode::invalid_argument, "trials must be >= 1");
  SumStatistics stats;
  stats.trials = trials;
  const double target = -2.0 * data.form.q;

  std::vector<double> residuals;
  for (int trial = 0; trial < trials; ++trial) {
    TorsionReport report;
    bool done = false;
    if (trial == 0 && options.has_pinned_c) {
      try {
        report = torsion_spectrum(data, options.pinned_c, tol, precision);
        done = true;
      } catch (const Error& e) {
        if (!options.resample_on_reject || (e.code() != ErrorCode::non_generic_trace &&
                                            e.code() != ErrorCode::degenerate_point))
          throw;
        ++stats.retries;
      }
    }
    for (int attempt = 0; !done && attempt <= tol.retry_budget; ++attempt) {
      if (attempt == tol.retry_budget)
        raise(ErrorCode::retries_exhausted, "per-trial resampling budget exhausted");
      const auto sample = sample_generic(
          data, derive_seed(seed, static_cast<std::uint64_t>(trial) * 1024 + attempt), tol,
          precision);
      stats.retries += sample.retries;
      try {
        report = torsion_spectrum(data, sample.c, tol, precision);
        done = true;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::non_generic_trace && e.code() != ErrorCode::degenerate_point)
          throw;
        ++stats.retries;
      }
    }
    residuals.push_back(report.relative_residual);
    stats.max_rel_residual = std::max(stats.max_rel_residual, report.relative_residual);
    if (is_torus(data.form)) {
      const double dev = std::abs(report.inverse_sum - target) / std::abs(target);
      stats.max_target_deviation = std::max(stats.max_target_deviation, dev);
    }
    stats.reports.push_back(std::move(report));
  }

  std::sort(residuals.begin(), residuals.end());
  const std::size_t n = residuals.size();
  stats.median_rel_residual =
      n % 2 == 1 ? residuals[n / 2] : 0.5 * (residuals[n / 2 - 1] + residuals[n / 2]);
  return stats;
}

}  // namespace twobridge
