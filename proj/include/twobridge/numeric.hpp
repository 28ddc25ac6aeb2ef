#pragma once

#include <complex>
#include <cstdint>
#include <limits>

#include "twobridge/config.hpp"
#include "twobridge/riley.hpp"
#include "twobridge/rootfind.hpp"

namespace twobridge {

/// One trace fiber: phi_w(d, .) with its roots and the genericity
/// diagnostics evaluated at every root.
template <class R>
struct FiberData {
  std::complex<R> d;
  UniPoly<R> fiber;
  RootSet<R> roots;
  R min_dphi_dm = std::numeric_limits<R>::infinity();
  R min_dphi_du = std::numeric_limits<R>::infinity();
  R min_w11 = std::numeric_limits<R>::infinity();
  R min_v11phiv = std::numeric_limits<R>::infinity();
  R constant_term = R(0);
};

template <class R>
FiberData<R> analyze_fiber(const RileyData& data, std::complex<R> d, const Tolerances& tol) {
  using C = std::complex<R>;
  FiberData<R> out;
  out.d = d;
  out.fiber = data.phi_w.template to_unipoly<R>(d);
  out.roots = poly_roots(out.fiber, tol);
  out.constant_term = std::abs(out.fiber.coefficient(0));

  // The rounded fiber coefficients perturb the roots; refine against the
  // exact Riley polynomial so the character points sit on the true variety.
  const R scale = out.fiber.coefficient_scale();
  out.roots.max_backward_error = R(0);
  out.roots.min_gap = std::numeric_limits<R>::infinity();
  for (auto& u : out.roots.roots) {
    for (int step = 0; step < 2; ++step) {
      const C fu = data.phi_w.eval_mu(d, u);
      const C fpu = data.dphi_du.eval_mu(d, u);
      if (std::abs(fpu) == R(0)) break;
      u -= fu / fpu;
    }
    out.roots.max_backward_error =
        std::max(out.roots.max_backward_error, std::abs(data.phi_w.eval_mu(d, u)) / scale);
  }
  for (std::size_t i = 0; i < out.roots.roots.size(); ++i)
    for (std::size_t j = i + 1; j < out.roots.roots.size(); ++j)
      out.roots.min_gap =
          std::min(out.roots.min_gap, std::abs(out.roots.roots[i] - out.roots.roots[j]));

  for (const auto& u : out.roots.roots) {
    out.min_dphi_dm = std::min(out.min_dphi_dm, std::abs(data.dphi_dm.eval_mu(d, u)));
    out.min_dphi_du = std::min(out.min_dphi_du, std::abs(data.dphi_du.eval_mu(d, u)));
    out.min_w11 = std::min(out.min_w11, std::abs(data.rho_w.a11.eval_mu(d, u)));
    out.min_v11phiv = std::min(out.min_v11phiv, std::abs(data.v11_phi_v.eval_mu(d, u)));
  }
  return out;
}

/// The rejection rule behind "generic c": simple well-separated roots, a
/// nonzero constant term, and all torsion denominators clear of zero.
template <class R>
bool fiber_generic(const FiberData<R>& fiber, const Tolerances& tol) {
  return fiber.roots.min_gap >= R(tol.root_gap) && fiber.constant_term >= R(tol.constant_term) &&
         fiber.min_dphi_dm >= R(tol.degeneracy) && fiber.min_dphi_du >= R(tol.degeneracy) &&
         fiber.min_w11 >= R(tol.degeneracy) && fiber.min_v11phiv >= R(tol.degeneracy);
}

struct SampleResult {
  std::complex<double> c;
  std::complex<double> d;
  int retries = 0;
};

/// Draws d from the annulus tol.annulus_min <= |d| <= tol.annulus_max with
/// |d^2 - 1| >= tol.unit_circle_margin, sets c = d + d^{-1}, and redraws
/// (up to tol.sample_budget) until the fiber passes fiber_generic.
SampleResult sample_generic(const RileyData& data, std::uint64_t seed, const Tolerances& tol,
                            Precision precision = Precision::standard);

template <class R>
struct EulerJacobiSum {
  std::complex<R> sum{};
  R magnitude_sum = R(0);
};

/// Sum of g(root)/f'(root) over the roots of f; zero whenever
/// deg g <= deg f - 2, f has simple roots, and f(0) != 0.
template <class R>
EulerJacobiSum<R> euler_jacobi_sum(const UniPoly<R>& f, const UniPoly<R>& g,
                                   const Tolerances& tol) {
  const auto roots = poly_roots(f, tol);
  if (!(roots.min_gap >= R(tol.root_gap)))
    raise(ErrorCode::double_root, "f has a (near-)double root");
  if (!(std::abs(f.coefficient(0)) >= R(tol.constant_term)))
    raise(ErrorCode::zero_constant_term, "f has a (near-)zero constant term");
  const UniPoly<R> fp = f.derivative();
  EulerJacobiSum<R> out;
  for (const auto& root : roots.roots) {
    const std::complex<R> term = g(root) / fp(root);
    out.sum += term;
    out.magnitude_sum += std::abs(term);
  }
  return out;
}

/// Deterministic per-trial seed derivation (order-independent).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace twobridge
