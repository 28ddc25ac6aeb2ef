#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <utility>
#include <vector>

namespace twobridge {

/// Dense univariate polynomial over complex floating point, index = degree.
/// Trailing coefficients that are exactly zero are trimmed so the leading
/// coefficient of a nonzero polynomial is nonzero.
template <class R>
class UniPoly {
 public:
  using C = std::complex<R>;

  UniPoly() = default;
  explicit UniPoly(std::vector<C> coefficients) : coeff_(std::move(coefficients)) { trim(); }

  int degree() const { return static_cast<int>(coeff_.size()) - 1; }
  bool is_zero() const { return coeff_.empty(); }
  const std::vector<C>& coefficients() const { return coeff_; }

  C coefficient(int i) const {
    if (i < 0 || i >= static_cast<int>(coeff_.size())) return C();
    return coeff_[i];
  }

  C operator()(C x) const {
    C acc{};
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly derivative() const {
    std::vector<C> d;
    d.reserve(coeff_.size() > 1 ? coeff_.size() - 1 : 0);
    for (int i = 1; i <= degree(); ++i) d.push_back(coeff_[i] * R(i));
    return UniPoly(std::move(d));
  }

  R coefficient_scale() const {
    R s(0);
    for (const auto& c : coeff_) s = std::max(s, std::abs(c));
    return s;
  }

 private:
  void trim() {
    while (!coeff_.empty() && coeff_.back() == C()) coeff_.pop_back();
  }

  std::vector<C> coeff_;
};

}  // namespace twobridge
