#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "twobridge/config.hpp"
#include "twobridge/errors.hpp"
#include "twobridge/unipoly.hpp"

namespace twobridge {

template <class R>
struct RootSet {
  std::vector<std::complex<R>> roots;
  R min_gap = std::numeric_limits<R>::infinity();
  R max_backward_error = R(0);  // max |f(root)| / max|coefficient|
};

/// All complex roots at once: Ehrlich-Aberth simultaneous iteration started
/// from a perturbed circle, then a few Newton steps per root. Deterministic
/// for a given input.
template <class R>
RootSet<R> poly_roots(const UniPoly<R>& f, const Tolerances& tol, int iteration_budget = 400) {
  using C = std::complex<R>;
  const int n = f.degree();
  if (n < 1) raise(ErrorCode::invalid_argument, "poly_roots requires degree >= 1");
  const R scale = f.coefficient_scale();
  if (!(std::abs(f.coefficients().back()) > tol.degeneracy * scale))
    raise(ErrorCode::degree_collapse, "leading coefficient under degeneracy tolerance");

  std::vector<C> monic(f.coefficients());
  const C lead = monic.back();
  for (auto& c : monic) c /= lead;
  const UniPoly<R> g(monic);
  const UniPoly<R> gp = g.derivative();

  R bound(0);
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(g.coefficient(i)));
  const R radius = R(1) + bound;

  const R two_pi = R(2) * std::numbers::pi_v<R>;
  std::vector<C> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    // Fixed angular offset plus a slight radial spiral; breaks symmetric
    // starting configurations without randomness.
    const R angle = two_pi * (R(k) + R(0.3517)) / R(n);
    const R r_k = radius * (R(1) + R(0.0625) * R(k) / R(n));
    z[static_cast<std::size_t>(k)] = std::polar(r_k, angle);
  }

  // A root is settled when |g(z)| is at the evaluation-noise level
  // eps * sum |b_i| |z|^i; iterating past that point only chases rounding.
  const auto noise_level = [&](C x) {
    R level(0);
    R power(1);
    const R ax = std::abs(x);
    for (int i = 0; i <= n; ++i) {
      level += std::abs(g.coefficient(i)) * power;
      power *= ax;
    }
    return level;
  };

  const R eps = std::numeric_limits<R>::epsilon();
  bool converged = false;
  for (int iter = 0; iter < iteration_budget && !converged; ++iter) {
    R max_step(0);
    bool all_settled = true;
    for (int k = 0; k < n; ++k) {
      C& zk = z[static_cast<std::size_t>(k)];
      const C fz = g(zk);
      if (std::abs(fz) <= R(4) * eps * noise_level(zk)) continue;
      all_settled = false;
      const C fpz = gp(zk);
      if (std::abs(fpz) == R(0)) {
        zk += C(eps * radius * R(64), eps * radius * R(64));
        max_step = std::numeric_limits<R>::infinity();
        continue;
      }
      const C newton = fz / fpz;
      C repulsion{};
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        repulsion += C(R(1), R(0)) / (zk - z[static_cast<std::size_t>(j)]);
      }
      const C denom = C(R(1), R(0)) - newton * repulsion;
      const C step = std::abs(denom) == R(0) ? newton : newton / denom;
      zk -= step;
      max_step = std::max(max_step, std::abs(step) / (R(1) + std::abs(zk)));
    }
    converged = all_settled || max_step <= R(16) * eps;
  }
  if (!converged) raise(ErrorCode::no_convergence, "root iteration budget exhausted");

  // Newton polish in wider precision; the quadratic step from an
  // already-converged iterate removes most of the forward error left by the
  // working-precision fixed point.
  {
    using W = long double;
    using CW = std::complex<W>;
    std::vector<CW> wide(f.coefficients().size());
    for (std::size_t i = 0; i < wide.size(); ++i)
      wide[i] = CW(static_cast<W>(f.coefficients()[i].real()),
                   static_cast<W>(f.coefficients()[i].imag()));
    const UniPoly<W> fw(wide);
    const UniPoly<W> fwp = fw.derivative();
    for (auto& root : z) {
      CW x(static_cast<W>(root.real()), static_cast<W>(root.imag()));
      for (int i = 0; i < 3; ++i) {
        const CW d = fwp(x);
        if (std::abs(d) == W(0)) break;
        x -= fw(x) / d;
      }
      root = C(static_cast<R>(x.real()), static_cast<R>(x.imag()));
    }
  }

  RootSet<R> out;
  out.roots = std::move(z);
  for (std::size_t i = 0; i < out.roots.size(); ++i)
    for (std::size_t j = i + 1; j < out.roots.size(); ++j)
      out.min_gap = std::min(out.min_gap, std::abs(out.roots[i] - out.roots[j]));
  for (const auto& root : out.roots)
    out.max_backward_error = std::max(out.max_backward_error, std::abs(f(root)) / scale);
  return out;
}

}  // namespace twobridge
