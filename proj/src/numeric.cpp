#include "twobridge/numeric.hpp"

#include <random>

namespace twobridge {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 over master + golden-ratio-stepped index
  std::uint64_t x = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

namespace {

template <class R>
bool sample_attempt(const RileyData& data, std::complex<double> d, const Tolerances& tol) {
  const std::complex<R> dr(static_cast<R>(d.real()), static_cast<R>(d.imag()));
  try {
    return fiber_generic(analyze_fiber<R>(data, dr, tol), tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::degree_collapse || e.code() == ErrorCode::no_convergence)
      return false;
    throw;
  }
}

}  // namespace

SampleResult sample_generic(const RileyData& data, std::uint64_t seed, const Tolerances& tol,
                            Precision precision) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radius_dist(tol.annulus_min, tol.annulus_max);
  std::uniform_real_distribution<double> angle_dist(0.0, 2.0 * 3.14159265358979323846);

  SampleResult out;
  for (int attempt = 0; attempt < tol.sample_budget; ++attempt) {
    const std::complex<double> d = std::polar(radius_dist(rng), angle_dist(rng));
    if (std::abs(d * d - 1.0) < tol.unit_circle_margin) {
      ++out.retries;
      continue;
    }
    const bool ok = precision == Precision::standard
                        ? sample_attempt<double>(data, d, tol)
                        : sample_attempt<long double>(data, d, tol);
    if (ok) {
      out.d = d;
      out.c = d + 1.0 / d;
      return out;
    }
    ++out.retries;
  }
  raise(ErrorCode::retries_exhausted,
        "could not sample a generic trace value within the budget");
}

}  // namespace twobridge
