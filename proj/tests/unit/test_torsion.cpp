#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "twobridge/numeric.hpp"
#include "twobridge/torsion.hpp"

using namespace twobridge;
using C = std::complex<double>;

namespace {

CharacterPoint point_at(const RileyData& data, C d, C u, const Tolerances& tol) {
  const double scale =
      static_cast<double>(data.phi_w.to_unipoly<double>(d).coefficient_scale());
  return make_character_point(data, d, u, scale, tol);
}

}  // namespace

TEST_CASE("trefoil torsion is identically -1/2") {
  Tolerances tol;
  const RileyData data = riley_polynomial(validate_form(3, 1));
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> radius(1.25, 3.5);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  for (int i = 0; i < 25; ++i) {
    const C d = std::polar(radius(rng), angle(rng));
    const C u = d * d + 1.0 / (d * d) - 1.0;
    const C value = torsion_at(data, point_at(data, d, u, tol), tol);
    CHECK(std::abs(value - C(-0.5, 0)) < 1e-12);
  }
}

TEST_CASE("trace_preimage examples") {
  Tolerances tol;
  {
    const RileyData data = riley_polynomial(validate_form(5, 3));
    const auto pre = trace_preimage(data, C(2.5, 0), tol);
    CHECK(std::abs(pre.d - C(2, 0)) < 1e-12);
    REQUIRE(pre.points.size() == 2);
    const double disc = std::sqrt(1.25 * 1.25 + 5.0);
    std::vector<double> expected{(1.25 + disc) / 2, (1.25 - disc) / 2};
    std::vector<double> got{pre.points[0].u.real(), pre.points[1].u.real()};
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK(std::abs(got[0] - expected[0]) < 1e-10);
    CHECK(std::abs(got[1] - expected[1]) < 1e-10);
    CHECK(std::abs(pre.points[0].u.imag()) < 1e-12);
  }
  {
    const RileyData data = riley_polynomial(validate_form(3, 1));
    const auto pre = trace_preimage(data, C(2.5, 0), tol);
    REQUIRE(pre.points.size() == 1);
    CHECK(std::abs(pre.points[0].u - C(3.25, 0)) < 1e-12);
  }
  {
    const RileyData data = riley_polynomial(validate_form(5, 3));
    try {
      trace_preimage(data, C(2.0, 0), tol);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::non_generic_trace);
    }
    CHECK_THROWS_AS(trace_preimage(data, C(-2.0, 0), tol), Error);
  }
}

TEST_CASE("character point invariants") {
  Tolerances tol;
  const RileyData data = riley_polynomial(validate_form(5, 3));
  // off-variety point fails the residual bound
  CHECK_THROWS_AS(point_at(data, C(2, 0), C(17.0, 0.4), tol), Error);
  // d at the excluded values
  CHECK_THROWS_AS(point_at(data, C(1.0, 0), C(1.0, 0), tol), Error);
  CHECK_THROWS_AS(point_at(data, C(-1.0, 0), C(1.0, 0), tol), Error);
}

TEST_CASE("torsion_spectrum: trefoil sum is -2, torus knots hit -2q") {
  Tolerances tol;
  {
    const RileyData data = riley_polynomial(validate_form(3, 1));
    const auto report = torsion_spectrum(data, C(2.5, 0), tol);
    CHECK(std::abs(report.inverse_sum - C(-2, 0)) < 1e-10);
    CHECK(report.points.size() == 1);
  }
  {
    const RileyData data = riley_polynomial(validate_form(5, 1));
    const auto sample = sample_generic(data, 3, Tolerances{});
    const auto report = torsion_spectrum(data, sample.c, tol);
    CHECK(std::abs(report.inverse_sum - C(-2, 0)) < 1e-8);
    CHECK(report.points.size() == 2);
  }
  {
    const RileyData data = riley_polynomial(validate_form(5, -1));
    const auto sample = sample_generic(data, 3, Tolerances{});
    const auto report = torsion_spectrum(data, sample.c, tol);
    CHECK(std::abs(report.inverse_sum - C(2, 0)) < 1e-8);
  }
}

TEST_CASE("torsion_spectrum: vanishing for the figure-eight") {
  Tolerances tol;
  const RileyData data = riley_polynomial(validate_form(5, 3));
  const auto sample = sample_generic(data, 11, tol);
  const auto report = torsion_spectrum(data, sample.c, tol);
  CHECK(report.relative_residual <= 1e-7);
  CHECK(report.points.size() == 2);
  CHECK(report.flags.min_root_gap >= tol.root_gap);
  CHECK(report.inverse_magnitude_sum > 0.0);
}

TEST_CASE("inverse_sum_statistics examples") {
  Tolerances tol;
  {
    const auto stats =
        inverse_sum_statistics(riley_polynomial(validate_form(7, 3)), 20, 1, tol);
    CHECK(stats.max_rel_residual <= 1e-7);
    CHECK(stats.reports.size() == 20);
    CHECK(stats.median_rel_residual <= stats.max_rel_residual);
  }
  {
    const auto stats =
        inverse_sum_statistics(riley_polynomial(validate_form(9, 1)), 20, 1, tol);
    CHECK(stats.max_target_deviation <= 1e-8);
  }
  {
    const auto stats =
        inverse_sum_statistics(riley_polynomial(validate_form(13, 5)), 20, 1, tol);
    CHECK(stats.max_rel_residual <= 1e-7);
  }
}

TEST_CASE("statistics are deterministic in the seed") {
  Tolerances tol;
  const RileyData data = riley_polynomial(validate_form(7, 5));
  const auto a = inverse_sum_statistics(data, 5, 99, tol);
  const auto b = inverse_sum_statistics(data, 5, 99, tol);
  REQUIRE(a.reports.size() == b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    CHECK(a.reports[i].c == b.reports[i].c);
    CHECK(a.reports[i].inverse_sum == b.reports[i].inverse_sum);
  }
}

TEST_CASE("d and 1/d give the same torsion magnitudes") {
  Tolerances tol;
  for (const auto& f : {SchubertForm{5, 3}, SchubertForm{7, 3}, SchubertForm{9, 5}}) {
    const RileyData data = riley_polynomial(f);
    const auto sample = sample_generic(data, 13, tol);
    const C d = sample.d;

    const auto fiber_a = analyze_fiber<double>(data, d, tol);
    const auto fiber_b = analyze_fiber<double>(data, 1.0 / d, tol);
    std::vector<double> mags_a, mags_b;
    const double scale_a = static_cast<double>(fiber_a.fiber.coefficient_scale());
    const double scale_b = static_cast<double>(fiber_b.fiber.coefficient_scale());
    for (const auto& u : fiber_a.roots.roots)
      mags_a.push_back(std::abs(torsion_at(data, make_character_point(data, d, u, scale_a, tol), tol)));
    for (const auto& u : fiber_b.roots.roots)
      mags_b.push_back(std::abs(
          torsion_at(data, make_character_point(data, 1.0 / d, u, scale_b, tol), tol)));
    std::sort(mags_a.begin(), mags_a.end());
    std::sort(mags_b.begin(), mags_b.end());
    REQUIRE(mags_a.size() == mags_b.size());
    for (std::size_t i = 0; i < mags_a.size(); ++i)
      CHECK(std::abs(mags_a[i] - mags_b[i]) <= 1e-8 * mags_a[i]);
  }
}

TEST_CASE("torus knots: formula reduces to the k = 1 expression") {
  Tolerances tol;
  for (const auto& f : {SchubertForm{5, 1}, SchubertForm{7, 1}, SchubertForm{5, -1}}) {
    const RileyData data = riley_polynomial(f);
    CHECK(data.k == 1);
    CHECK(data.words.v.empty());
    CHECK(data.eps_k == f.q);
    const auto sample = sample_generic(data, 17, tol);
    const auto report = torsion_spectrum(data, sample.c, tol);
    const C d = report.d;
    for (std::size_t i = 0; i < report.points.size(); ++i) {
      const C u = report.points[i].u;
      const C w11 = data.rho_w.a11.eval_mu(d, u);
      const C dphi = data.dphi_du.eval_mu(d, u);
      const C reduced = powi(d, f.q + 1) * w11 * dphi / (2.0 * (d * d - 1.0));
      CHECK(std::abs(report.torsions[i] - reduced) <= 1e-13 * std::abs(reduced));
    }
  }
}

TEST_CASE("inverse torsions vary continuously along a short path in c") {
  Tolerances tol;
  const RileyData data = riley_polynomial(validate_form(5, 3));
  const auto sample = sample_generic(data, 19, tol);
  C c = sample.c;
  const C step(1e-3, 5e-4);
  auto previous = torsion_spectrum(data, c, tol);
  for (int i = 1; i <= 10; ++i) {
    const auto current = torsion_spectrum(data, c + static_cast<double>(i) * step, tol);
    REQUIRE(current.points.size() == previous.points.size());
    // match roots by nearest neighbour, then compare 1/T
    for (std::size_t a = 0; a < previous.points.size(); ++a) {
      std::size_t best = 0;
      double best_dist = 1e300;
      for (std::size_t b = 0; b < current.points.size(); ++b) {
        const double dist = std::abs(current.points[b].u - previous.points[a].u);
        if (dist < best_dist) {
          best_dist = dist;
          best = b;
        }
      }
      const C inv_prev = 1.0 / previous.torsions[a];
      const C inv_curr = 1.0 / current.torsions[best];
      CHECK(std::abs(inv_curr - inv_prev) <= 0.05 * (std::abs(inv_prev) + 1e-6));
    }
    previous = current;
  }
}

TEST_CASE("degenerate points raise instead of returning junk") {
  Tolerances tol;
  const RileyData data = riley_polynomial(validate_form(5, 3));
  const auto pre = trace_preimage(data, C(2.5, 0), tol);
  Tolerances strict = tol;
  strict.degeneracy = 1e9;
  try {
    torsion_at(data, pre.points[0], strict);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::degenerate_point);
  }
}

TEST_CASE("pinned trace values: rejection and resampling") {
  Tolerances tol;
  const RileyData data = riley_polynomial(validate_form(5, 3));
  StatisticsOptions pinned;
  pinned.has_pinned_c = true;
  pinned.pinned_c = C(2.0, 0);

  CHECK_THROWS_AS(inverse_sum_statistics(data, 1, 1, tol, Precision::standard, pinned), Error);

  pinned.resample_on_reject = true;
  const auto stats = inverse_sum_statistics(data, 1, 1, tol, Precision::standard, pinned);
  CHECK(stats.reports.size() == 1);
  CHECK(stats.retries >= 1);

  StatisticsOptions good;
  good.has_pinned_c = true;
  good.pinned_c = C(2.5, 0);
  const auto pinned_stats =
      inverse_sum_statistics(data, 1, 1, tol, Precision::standard, good);
  CHECK(pinned_stats.reports[0].c == C(2.5, 0));
}

TEST_CASE("extended precision spectra agree with standard ones") {
  Tolerances tol;
  const RileyData data = riley_polynomial(validate_form(7, 3));
  const auto sample = sample_generic(data, 23, tol);
  const auto std_report = torsion_spectrum(data, sample.c, tol, Precision::standard);
  const auto ext_report = torsion_spectrum(data, sample.c, tol, Precision::extended);
  REQUIRE(std_report.torsions.size() == ext_report.torsions.size());
  CHECK(ext_report.relative_residual <= std_report.relative_residual * 1.01 + 1e-15);
  for (std::size_t i = 0; i < std_report.torsions.size(); ++i) {
    std::size_t best = 0;
    double best_dist = 1e300;
    for (std::size_t j = 0; j < ext_report.torsions.size(); ++j) {
      const double dist = std::abs(ext_report.points[j].u - std_report.points[i].u);
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    CHECK(std::abs(std_report.torsions[i] - ext_report.torsions[best]) <=
          1e-10 * std::abs(ext_report.torsions[best]));
  }
}
