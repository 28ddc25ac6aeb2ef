// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "twobridge/numeric.hpp"
#include "twobridge/oracle.hpp"
#include "twobridge/riley.hpp"
#include "twobridge/torsion.hpp"

using namespace twobridge;
using C = std::complex<double>;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", index, name.c_str(),
              detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const std::vector<SchubertForm> kTorusKnots = {{3, 1}, {5, 1}, {7, 1}, {9, 1}, {5, -1}};
const std::vector<SchubertForm> kHyperbolicKnots = {{5, 3}, {7, 3},  {7, 5},
                                                    {9, 5}, {11, 7}, {13, 5}};

std::string fmt(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3g", value);
  return buffer;
}

void criterion1_trefoil_constant() {
  const auto start = Clock::now();
  const Tolerances tol;
  const RileyData data = riley_polynomial(validate_form(3, 1));
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> radius(tol.annulus_min, tol.annulus_max);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const C d = std::polar(radius(rng), angle(rng));
    const C u = d * d + 1.0 / (d * d) - 1.0;
    const double scale =
        static_cast<double>(data.phi_w.to_unipoly<double>(d).coefficient_scale());
    const C value = torsion_at(data, make_character_point(data, d, u, scale, tol), tol);
    worst = std::max(worst, std::abs(value - C(-0.5, 0.0)));
  }
  const double elapsed = seconds_since(start);
  report(1, "trefoil torsion is -1/2 at 100 generic points", worst <= 1e-10 && elapsed < 1.0,
         "max abs error " + fmt(worst) + ", " + fmt(elapsed) + " s");
}

void criterion2_torus_sums() {
  const auto start = Clock::now();
  const Tolerances tol;
  double worst = 0.0;
  bool pass = true;
  for (const auto& form : kTorusKnots) {
    const RileyData data = riley_polynomial(validate_form(form.p, form.q));
    const auto stats = inverse_sum_statistics(data, 20, 71 + form.p + form.q, tol);
    worst = std::max(worst, stats.max_target_deviation);
    pass = pass && stats.max_target_deviation <= 1e-8;
  }
  const double elapsed = seconds_since(start);
  report(2, "torus inverse sums equal -2q over 20 generic traces each",
         pass && elapsed < 5.0, "max relative deviation " + fmt(worst) + ", " + fmt(elapsed) + " s");
}

void criterion3_vanishing_identity() {
  const auto start = Clock::now();
  const Tolerances tol;
  double worst = 0.0;
  bool pass = true;
  for (const auto& form : kHyperbolicKnots) {
    const RileyData data = riley_polynomial(validate_form(form.p, form.q));
    const auto stats = inverse_sum_statistics(data, 20, 131 + form.p + form.q, tol);
    worst = std::max(worst, stats.max_rel_residual);
    pass = pass && stats.max_rel_residual <= tol.vanishing_rel;
  }
  const double elapsed = seconds_since(start);
  report(3, "inverse torsion sums vanish on hyperbolic knots", pass && elapsed < 30.0,
         "max relative residual " + fmt(worst) + ", " + fmt(elapsed) + " s");
}

void criterion4_oracle_agreement() {
  const Tolerances tol;
  double worst = 0.0;
  bool pass = true;
  std::vector<SchubertForm> all = kTorusKnots;
  all.insert(all.end(), kHyperbolicKnots.begin(), kHyperbolicKnots.end());
  for (const auto& form : all) {
    const RileyData data = riley_polynomial(validate_form(form.p, form.q));
    const int fiber_size = (form.p - 1) / 2;
    const int samples = (10 + fiber_size - 1) / fiber_size + 1;
    const auto comparison = compare_oracle(data, samples, 17, tol);
    worst = std::max(worst, comparison.max_rel_diff);
    pass = pass && comparison.max_rel_diff <= tol.oracle_rel && comparison.sign_constant &&
           static_cast<int>(comparison.rows.size()) >= 10;
  }
  report(4, "formula matches the cochain oracle with a constant sign", pass,
         "max magnitude rel diff " + fmt(worst));
}

bool delta0_matches_reference() {
  const MultiPoly u = MultiPoly::var_u();
  const MultiPoly one = MultiPoly::constant(1);
  auto mp = [](int e) { return MultiPoly::var_m(e); };
  std::array<std::array<MultiPoly, 3>, 6> ref;
  ref[0] = {mp(2) - one, MultiPoly::constant(-2) * mp(1), -one};
  ref[1] = {MultiPoly(), MultiPoly(), mp(-1)};
  ref[2] = {MultiPoly(), MultiPoly(), mp(-2) - one};
  ref[3] = {mp(2) - one, MultiPoly(), MultiPoly()};
  ref[4] = {u * mp(1), MultiPoly(), MultiPoly()};
  ref[5] = {-(u * u), MultiPoly::constant(-2) * u * mp(-1), mp(-2) - one};

  const auto ad1 = adjoint_of_poly(rho_bar_generator(1, 1).specialized());
  const auto ad2 = adjoint_of_poly(rho_bar_generator(2, 1).specialized());
  for (std::size_t row = 0; row < 3; ++row)
    for (std::size_t col = 0; col < 3; ++col) {
      const MultiPoly eye = row == col ? one : MultiPoly();
      if (!(ad1[row][col] - eye == ref[row][col])) return false;
      if (!(ad2[row][col] - eye == ref[row + 3][col])) return false;
    }
  return true;
}

bool ek_identity_holds() {
  const std::array<std::array<int, 3>, 4> admissible = {
      std::array<int, 3>{1, 1, -1}, std::array<int, 3>{1, -1, -1},
      std::array<int, 3>{-1, 1, 1}, std::array<int, 3>{-1, -1, 1}};
  for (const auto& [a, b, c] : admissible) {
    const MultiPoly lhs = MultiPoly::constant(a * b) * MultiPoly::var_m(-a - b) +
                          MultiPoly::constant(a) * MultiPoly::var_m(-a) * m_minus_m_inverse() +
                          MultiPoly::constant(b * c) * MultiPoly::var_m(b + c);
    if (!lhs.is_zero()) return false;
  }
  return true;
}

void criterion5_exact_identities() {
  bool pass = delta0_matches_reference() && ek_identity_holds();
  std::string failed;
  std::vector<SchubertForm> all = kTorusKnots;
  all.insert(all.end(), kHyperbolicKnots.begin(), kHyperbolicKnots.end());
  for (const auto& form : all) {
    const RileyData data = riley_polynomial(validate_form(form.p, form.q));
    const auto checks = verify_riley_identities(data);
    if (!checks.all()) {
      pass = false;
      failed += " (" + std::to_string(form.p) + "," + std::to_string(form.q) + ")";
    }
  }
  report(5, "exact symbolic identities (canonical-form equality)", pass,
         pass ? "det, u w12 + w21, dagger, relator, v', ek, degree all exact"
              : "failures at" + failed);
}

void criterion6_leading_term_structure() {
  std::mt19937_64 rng(4096);
  std::uniform_int_distribution<int> pairs_dist(1, 5);
  std::uniform_int_distribution<int> sign(0, 1);
  bool pass = true;
  for (int trial = 0; trial < 50 && pass; ++trial) {
    const int pairs = pairs_dist(rng);
    std::vector<Syllable> syl;
    for (int i = 0; i < pairs; ++i) {
      syl.push_back(Syllable{1, sign(rng) == 0 ? 1 : -1});
      syl.push_back(Syllable{2, sign(rng) == 0 ? 1 : -1});
    }
    MultiPoly previous;
    for (int j = 1; j <= pairs && pass; ++j) {
      const Word h_j({syl.begin(), syl.begin() + 2 * j});
      const auto profile = leading_profile(h_j);
      const int f1 = syl[0].exponent;
      const int f2j = syl[static_cast<std::size_t>(2 * j - 1)].exponent;
      pass = pass && profile.u_degree == std::array<int, 4>{j, j - 1, j, j - 1};
      pass = pass && profile.leading[0] == MultiPoly::constant(1);
      pass = pass && profile.leading[1] ==
                         MultiPoly::constant(-f2j) * MultiPoly::var_m(-f2j);
      pass = pass && profile.leading[2] == MultiPoly::constant(f1) * MultiPoly::var_m(-f1);
      pass = pass && profile.leading[3] ==
                         MultiPoly::constant(-f1 * f2j) * MultiPoly::var_m(-f1 - f2j);
      if (j > 1) pass = pass && profile.subleading_diff == previous;
      previous = profile.subleading_diff;
    }
  }
  report(6, "alternating-word leading terms and j-independent subleading gap", pass,
         "50 random sign sequences, exact");
}

void criterion7_euler_jacobi() {
  const Tolerances tol;
  std::mt19937_64 rng(8192);
  std::uniform_int_distribution<int> degree_dist(2, 9);
  std::uniform_real_distribution<double> radius(0.3, 2.5);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  bool pass = true;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int deg_f = degree_dist(rng);
    std::vector<C> roots;
    while (static_cast<int>(roots.size()) < deg_f) {
      const C candidate = std::polar(radius(rng), angle(rng));
      bool ok = std::abs(candidate) > 0.1;
      for (const auto& r : roots) ok = ok && std::abs(candidate - r) > 0.15;
      if (ok) roots.push_back(candidate);
    }
    std::vector<C> f_coeff{C(1, 0)};
    for (const auto& r : roots) {
      std::vector<C> next(f_coeff.size() + 1, C());
      for (std::size_t i = 0; i < f_coeff.size(); ++i) {
        next[i + 1] += f_coeff[i];
        next[i] -= f_coeff[i] * r;
      }
      f_coeff = std::move(next);
    }
    std::vector<C> g_coeff(static_cast<std::size_t>(deg_f - 1));
    for (auto& value : g_coeff) value = C(coeff(rng), coeff(rng));
    const UniPoly<double> f(f_coeff), g(g_coeff);
    if (g.is_zero()) continue;
    const auto ej = euler_jacobi_sum(f, g, tol);
    const double bound = ej.magnitude_sum < 1.0 ? 1e-9 : 1e-9 * ej.magnitude_sum;
    worst = std::max(worst, std::abs(ej.sum) / bound);
    pass = pass && std::abs(ej.sum) <= bound;
  }
  report(7, "Euler-Jacobi sums vanish on 100 random instances", pass,
         "worst residual at " + fmt(worst) + "x the bound");
}

void criterion8_cochain_invariants() {
  const Tolerances tol;
  bool pass = true;
  std::string failed;
  std::vector<SchubertForm> all = kTorusKnots;
  all.insert(all.end(), kHyperbolicKnots.begin(), kHyperbolicKnots.end());
  for (const auto& form : all) {
    const RileyData data = riley_polynomial(validate_form(form.p, form.q));
    bool knot_ok = true;
    int points_seen = 0;
    std::uint64_t sample_index = 0;
    while (points_seen < 20) {
      const auto sample =
          sample_generic(data, derive_seed(555 + form.p * 100 + form.q, sample_index++), tol);
      const auto spectrum = torsion_spectrum(data, sample.c, tol);
      for (const auto& pt : spectrum.points) {
        if (points_seen == 20) break;
        ++points_seen;
        const CochainData cochain = assemble_cochain(data, pt, tol);

        const double scale = cochain.delta1.norm() * cochain.delta0.norm() + 1.0;
        knot_ok = knot_ok && (cochain.delta1 * cochain.delta0).norm() <= 1e-9 * scale;

        Eigen::JacobiSVD<Eigen::MatrixXcd> svd0(Eigen::MatrixXcd(cochain.delta0),
                                                Eigen::ComputeThinU);
        const auto& sv0 = svd0.singularValues();
        int rank0 = 0;
        for (Eigen::Index i = 0; i < sv0.size(); ++i)
          if (sv0(i) > tol.svd_rel * sv0(0)) ++rank0;
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd1{Eigen::MatrixXcd(cochain.delta1)};
        const auto& sv1 = svd1.singularValues();
        int rank1 = 0;
        for (Eigen::Index i = 0; i < sv1.size(); ++i)
          if (sv1(i) > tol.svd_rel * sv1(0)) ++rank1;
        knot_ok = knot_ok && rank0 == 3 && rank1 == 2;

        // h1 is a cocycle but not a coboundary
        knot_ok = knot_ok && (cochain.delta1 * cochain.h1_rep).norm() <=
                                 1e-9 * (1.0 + cochain.delta1.norm() * cochain.h1_rep.norm());
        const Eigen::MatrixXcd u_cols = svd0.matrixU().leftCols(3);
        const Vec6cd projected = u_cols * (u_cols.adjoint() * cochain.h1_rep);
        knot_ok = knot_ok && (cochain.h1_rep - projected).norm() >
                                 tol.coboundary_distance * cochain.h1_rep.norm();

        // F1 and F2 normalizations
        knot_ok = knot_ok &&
                  std::abs(killing(cochain.p_vector, cochain.h1_rep.head<3>()) - C(1, 0)) <
                      1e-9;
        const auto norms = oracle_normalizations(data, pt, tol);
        knot_ok = knot_ok && std::abs(norms.f1 - C(1, 0)) < 1e-9 &&
                  std::abs(norms.f2 - C(1, 0)) < 1e-9;

        // beta-choice invariance of the oracle
        const C reference = torsion_oracle(data, pt, tol);
        const C lambda(1.7, -0.9);
        const C alternative = torsion_oracle_with_b1(
            data, pt, lambda * cochain.alpha2, -lambda * cochain.alpha1, tol);
        knot_ok = knot_ok && std::abs(alternative - reference) <= 1e-8 * std::abs(reference);
      }
    }
    if (!knot_ok) {
      pass = false;
      failed += " (" + std::to_string(form.p) + "," + std::to_string(form.q) + ")";
    }
  }
  report(8, "cochain complex invariants at 20 characters per knot", pass,
         pass ? "ranks, cocycle, normalizations, beta invariance" : "failures at" + failed);
}

}  // namespace

int main() {
  criterion1_trefoil_constant();
  criterion2_torus_sums();
  criterion3_vanishing_identity();
  criterion4_oracle_agreement();
  criterion5_exact_identities();
  criterion6_leading_term_structure();
  criterion7_euler_jacobi();
  criterion8_cochain_invariants();
  if (g_failures > 0) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
