#pragma once

#include <compare>
#include <complex>
#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "twobridge/errors.hpp"
#include "twobridge/unipoly.hpp"

namespace twobridge {

using BigInt = boost::multiprecision::cpp_int;

enum class Var { t1, t2, t3 };

/// Exponent triple of one monomial t1^e1 t2^e2 t3^e3 with e1, e2 in Z
/// (Laurent) and e3 >= 0. The specialized two-variable ring Z[m^{+-1}, u]
/// reuses the same storage with e1 = exponent of m, e2 = 0, e3 = exponent
/// of u.
struct Exponents {
  int e1 = 0;
  int e2 = 0;
  int e3 = 0;
  friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

enum class PolyStyle { t_vars, m_u };

/// Integer exponentiation of a complex value; negative exponents invert the
/// base first. The caller is responsible for excluding a zero base with a
/// negative exponent.
template <class R>
std::complex<R> powi(std::complex<R> base, int e) {
  if (e < 0) {
    base = std::complex<R>(R(1), R(0)) / base;
    e = -e;
  }
  std::complex<R> acc(R(1), R(0));
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

template <class R>
R bigint_to_real(const BigInt& v) {
  return v.template convert_to<R>();
}

/// Accumulator type for point evaluations: one step wider than the working
/// precision where the hardware offers it, so cancellation-heavy sums keep
/// full working-precision accuracy.
template <class R>
struct wide_real {
  using type = long double;
};
template <>
struct wide_real<long double> {
  using type = long double;
};
template <class R>
using wide_real_t = typename wide_real<R>::type;

/// Sparse trivariate Laurent polynomial over arbitrary-precision integers.
/// Always kept in canonical form: no stored coefficient is zero, so equality
/// is exactly term-map equality.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, BigInt>;

  MultiPoly() = default;

  static MultiPoly constant(BigInt c);
  static MultiPoly constant(long long c) { return constant(BigInt(c)); }
  static MultiPoly monomial(BigInt c, Exponents e);
  static MultiPoly variable(Var v, int power = 1);
  static MultiPoly var_m(int power = 1) { return variable(Var::t1, power); }
  static MultiPoly var_u() { return variable(Var::t3, 1); }
  static MultiPoly from_terms(TermMap terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const TermMap& terms() const { return terms_; }

  bool operator==(const MultiPoly&) const = default;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& rhs) const;
  MultiPoly operator-(const MultiPoly& rhs) const;
  MultiPoly operator*(const MultiPoly& rhs) const;
  MultiPoly scaled(const BigInt& c) const;

  /// Formal partial derivative; Laurent exponents follow e * t^{e-1}
  /// including negative e.
  MultiPoly partial(Var v) const;

  /// t1 = t2 = m, t3 = u: merges the first two exponents.
  MultiPoly specialize_symbolic() const;

  /// Largest t3/u exponent; -1 for the zero polynomial.
  int degree_u() const;
  /// Terms of u-degree `degree`, with that exponent removed (Laurent in m).
  MultiPoly coeff_of_u(int degree) const;
  MultiPoly leading_u_coeff() const { return coeff_of_u(degree_u()); }

  /// The unique term of a monomial; throws Internal otherwise.
  std::pair<Exponents, BigInt> single_term() const;

  template <class R>
  std::complex<R> eval(std::complex<R> t1, std::complex<R> t2, std::complex<R> t3) const {
    using C = std::complex<R>;
    check_zero_bases(t1 == C(), t2 == C(), t3 == C());
    using W = wide_real_t<R>;
    using CW = std::complex<W>;
    const CW w1(static_cast<W>(t1.real()), static_cast<W>(t1.imag()));
    const CW w2(static_cast<W>(t2.real()), static_cast<W>(t2.imag()));
    const CW w3(static_cast<W>(t3.real()), static_cast<W>(t3.imag()));
    CW acc{};
    for (const auto& [e, coeff] : terms_) {
      CW term(bigint_to_real<W>(coeff), W(0));
      if (e.e1 != 0) term *= powi(w1, e.e1);
      if (e.e2 != 0) term *= powi(w2, e.e2);
      if (e.e3 != 0) term *= powi(w3, e.e3);
      acc += term;
    }
    return C(static_cast<R>(acc.real()), static_cast<R>(acc.imag()));
  }

  /// Evaluation in the specialized ring; requires e2 == 0 on every term.
  template <class R>
  std::complex<R> eval_mu(std::complex<R> m, std::complex<R> u) const {
    return eval(m, std::complex<R>(R(1), R(0)), u);
  }

  /// Specialized ring only: substitutes m = d and returns the resulting
  /// polynomial in u with complex coefficients.
  template <class R>
  UniPoly<R> to_unipoly(std::complex<R> d) const {
    using C = std::complex<R>;
    require_specialized();
    check_zero_bases(d == C(), false, false);
    using W = wide_real_t<R>;
    using CW = std::complex<W>;
    const CW dw(static_cast<W>(d.real()), static_cast<W>(d.imag()));
    std::vector<CW> acc(static_cast<std::size_t>(degree_u() < 0 ? 0 : degree_u() + 1), CW());
    for (const auto& [e, c] : terms_)
      acc[static_cast<std::size_t>(e.e3)] += CW(bigint_to_real<W>(c), W(0)) * powi(dw, e.e1);
    std::vector<C> coeff(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i)
      coeff[i] = C(static_cast<R>(acc[i].real()), static_cast<R>(acc[i].imag()));
    return UniPoly<R>(std::move(coeff));
  }

  std::string to_string(PolyStyle style = PolyStyle::m_u) const;

 private:
  void check_zero_bases(bool t1_zero, bool t2_zero, bool t3_zero) const;
  void require_specialized() const;

  TermMap terms_;
};

inline MultiPoly operator*(long long c, const MultiPoly& p) { return p.scaled(BigInt(c)); }

/// m - m^{-1} in the specialized ring.
MultiPoly m_minus_m_inverse();

}  // namespace twobridge
