#include "twobridge/oracle.hpp"

#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "twobridge/numeric.hpp"

namespace twobridge {

namespace {

// Minimal complex arithmetic over a 113-bit float, used only to polish a
// fiber root far enough below the long double noise floor that the kernel's
// off-variety sensitivity becomes harmless.
using Quad = boost::multiprecision::cpp_bin_float_quad;

struct QComplex {
  Quad re{0}, im{0};
};

QComplex operator+(const QComplex& a, const QComplex& b) { return {a.re + b.re, a.im + b.im}; }
QComplex operator-(const QComplex& a, const QComplex& b) { return {a.re - b.re, a.im - b.im}; }
QComplex operator*(const QComplex& a, const QComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
QComplex operator/(const QComplex& a, const QComplex& b) {
  const Quad den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

QComplex qpowi(QComplex base, int e) {
  if (e < 0) {
    base = QComplex{Quad(1), Quad(0)} / base;
    e = -e;
  }
  QComplex acc{Quad(1), Quad(0)};
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

QComplex qeval_mu(const MultiPoly& p, const QComplex& m, const QComplex& u) {
  QComplex acc;
  for (const auto& [e, coeff] : p.terms()) {
    QComplex term{Quad(coeff.str()), Quad(0)};
    if (e.e1 != 0) term = term * qpowi(m, e.e1);
    if (e.e3 != 0) term = term * qpowi(u, e.e3);
    acc = acc + term;
  }
  return acc;
}

// Newton steps for phi_w(d, .) = 0 in quad precision.
QComplex refine_root_quad_impl(const RileyData& data, const QComplex& dq, QComplex uq) {
  for (int step = 0; step < 3; ++step) {
    const QComplex fu = qeval_mu(data.phi_w, dq, uq);
    const QComplex fpu = qeval_mu(data.dphi_du, dq, uq);
    if (fpu.re == 0 && fpu.im == 0) break;
    uq = uq - fu / fpu;
  }
  return uq;
}

template <class R>
QComplex to_quad(std::complex<R> z) {
  return {Quad(static_cast<long double>(z.real())), Quad(static_cast<long double>(z.imag()))};
}

template <class R>
std::complex<R> refine_root_quad(const RileyData& data, std::complex<R> d, std::complex<R> u) {
  const QComplex uq = refine_root_quad_impl(data, to_quad(d), to_quad(u));
  return {static_cast<R>(static_cast<long double>(uq.re)),
          static_cast<R>(static_cast<long double>(uq.im))};
}

struct QMat2 {
  QComplex a11, a12, a21, a22;
};

QMat2 qmul(const QMat2& a, const QMat2& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

QMat2 qrho(const Word& word, const QComplex& d, const QComplex& u) {
  const QComplex one{Quad(1), Quad(0)};
  const QComplex zero{};
  const QComplex d_inv = one / d;
  QMat2 acc{one, zero, zero, one};
  for (const auto& s : word.syllables()) {
    QMat2 g;
    if (s.generator == 1)
      g = s.exponent == 1 ? QMat2{d, one, zero, d_inv} : QMat2{d_inv, zero - one, zero, d};
    else
      g = s.exponent == 1 ? QMat2{d, zero, zero - u, d_inv} : QMat2{d_inv, zero, u, d};
    acc = qmul(acc, g);
  }
  return acc;
}

// g e3 g^{-1} with the adjugate inverse (det = 1).
QMat2 qconjugate_e3(const QMat2& g) {
  const QMat2 e3{QComplex{}, QComplex{}, QComplex{Quad(1), Quad(0)}, QComplex{}};
  const QMat2 inv{g.a22, QComplex{} - g.a12, QComplex{} - g.a21, g.a11};
  return qmul(qmul(g, e3), inv);
}

template <class R>
using M2 = Eigen::Matrix<std::complex<R>, 2, 2>;
template <class R>
using M3 = Eigen::Matrix<std::complex<R>, 3, 3>;
template <class R>
using V3 = Eigen::Matrix<std::complex<R>, 3, 1>;
template <class R>
using V6 = Eigen::Matrix<std::complex<R>, 6, 1>;
template <class R>
using M63 = Eigen::Matrix<std::complex<R>, 6, 3>;
template <class R>
using M36 = Eigen::Matrix<std::complex<R>, 3, 6>;
template <class R>
using M66 = Eigen::Matrix<std::complex<R>, 6, 6>;

template <class R>
M2<R> generator_matrix(int gen, int exp, std::complex<R> d, std::complex<R> u) {
  using C = std::complex<R>;
  const C one(R(1), R(0));
  const C d_inv = one / d;
  M2<R> g;
  if (gen == 1) {
    if (exp == 1)
      g << d, one, C(), d_inv;
    else
      g << d_inv, -one, C(), d;
  } else {
    if (exp == 1)
      g << d, C(), -u, d_inv;
    else
      g << d_inv, C(), u, d;
  }
  return g;
}

template <class R>
M2<R> rho_matrix(const Word& word, std::complex<R> d, std::complex<R> u) {
  M2<R> acc = M2<R>::Identity();
  for (const auto& s : word.syllables()) acc *= generator_matrix(s.generator, s.exponent, d, u);
  return acc;
}

// Like rho_matrix, but also reports the largest intermediate norm; the
// rounding error of the product (and of its determinant) scales with the
// intermediate growth, not with the final norm.
template <class R>
M2<R> rho_matrix_growth(const Word& word, std::complex<R> d, std::complex<R> u, R& growth) {
  M2<R> acc = M2<R>::Identity();
  growth = R(1);
  for (const auto& s : word.syllables()) {
    acc *= generator_matrix(s.generator, s.exponent, d, u);
    growth = std::max(growth, acc.template lpNorm<Eigen::Infinity>());
  }
  return acc;
}

template <class R>
M3<R> adjoint_matrix(const M2<R>& g, R condition_scale = R(1)) {
  using C = std::complex<R>;
  const R norm = std::max(condition_scale, g.template lpNorm<Eigen::Infinity>());
  const R slack = R(1e-10) * std::max(R(1), norm * norm);
  if (!(std::abs(g.determinant() - C(R(1), R(0))) <= slack))
    raise(ErrorCode::not_unimodular, "adjoint_of requires det = 1");
  const M2<R> inv = (M2<R>() << g(1, 1), -g(0, 1), -g(1, 0), g(0, 0)).finished();
  M3<R> ad;
  for (int i = 0; i < 3; ++i) {
    M2<R> e = M2<R>::Zero();
    if (i == 0) e(0, 1) = R(1);
    if (i == 1) {
      e(0, 0) = R(1);
      e(1, 1) = R(-1);
    }
    if (i == 2) e(1, 0) = R(1);
    const M2<R> x = g * e * inv;
    ad(0, i) = x(0, 1);
    ad(1, i) = (x(0, 0) - x(1, 1)) / R(2);
    ad(2, i) = x(1, 0);
  }
  return ad;
}

std::complex<double> narrow_c(std::complex<long double> z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

template <class R>
struct OracleKernel {
  using C = std::complex<R>;

  const RileyData& data;
  const Tolerances& tol;
  C d, u;

  OracleKernel(const RileyData& data_, const Tolerances& tol_, std::complex<double> dd,
               std::complex<double> uu)
      : data(data_),
        tol(tol_),
        d(static_cast<R>(dd.real()), static_cast<R>(dd.imag())),
        u(static_cast<R>(uu.real()), static_cast<R>(uu.imag())) {
    // The Fox/adjoint assembly agrees with the torsion only on the zero set
    // of phi_w, and its off-variety sensitivity grows quickly with |d| and
    // the word length. Polish u in quad precision so the remaining distance
    // to the variety is the representation rounding, not the working
    // precision's evaluation noise.
    u = refine_root_quad<R>(data, d, u);
  }

  C ev(const MultiPoly& p) const { return p.eval_mu(d, u); }

  M63<R> delta0() const {
    M63<R> out;
    out.template topRows<3>() =
        adjoint_matrix<R>(generator_matrix(1, 1, d, u)) - M3<R>::Identity();
    out.template bottomRows<3>() =
        adjoint_matrix<R>(generator_matrix(2, 1, d, u)) - M3<R>::Identity();
    return out;
  }

  M36<R> delta1() const {
    M36<R> out;
    for (int gen = 1; gen <= 2; ++gen) {
      M3<R> block = M3<R>::Zero();
      for (const auto& term : fox_derivative(data.words.r, gen)) {
        R growth(1);
        const M2<R> prefix = rho_matrix_growth(term.prefix, d, u, growth);
        block += R(term.sign) * adjoint_matrix<R>(prefix, growth);
      }
      out.template block<3, 3>(0, 3 * (gen - 1)) = block;
    }
    return out;
  }

  V6<R> a_vec(int i) const {
    const C d_inv = C(R(1), R(0)) / d;
    V6<R> out = V6<R>::Zero();
    switch (i) {
      case 1:
        out(0) = C(R(-1), R(0));
        out(1) = d_inv;
        break;
      case 2:
        out(4) = d_inv;
        out(5) = -u * d_inv * d_inv;
        break;
      case 3:
        out(5) = -d_inv;
        break;
      default:
        out = a_vec(1) + a_vec(2);  // A0 = A1 + A2
        break;
    }
    return out;
  }

  struct Basis {
    V6<R> h1;
    V3<R> h2;
    C alpha1, alpha2;
    C beta1, beta2;
  };

  Basis basis() const {
    Basis b;
    b.alpha1 = ev(data.alpha1);
    b.alpha2 = ev(data.alpha2);
    const C dphi_dm = ev(data.dphi_dm);
    const C dphi_du = ev(data.dphi_du);
    const C vprime_product = ev(data.vprime11_phi_vprime);
    const R floor = static_cast<R>(tol.degeneracy);
    if (std::abs(dphi_dm) < floor || std::abs(dphi_du) < floor ||
        std::abs(vprime_product) < floor)
      raise(ErrorCode::degenerate_point, "basis normalization divides by a sub-tolerance value");
    const C one(R(1), R(0));
    const C d_inv2 = one / (d * d);
    if (std::abs(one - d_inv2) < floor)
      raise(ErrorCode::degenerate_point, "m too close to +-1 for the h1 normalization");
    b.h1 = (a_vec(0) - (dphi_dm / dphi_du) * a_vec(3)) / (R(4) * (one - d_inv2));
    b.h2 = V3<R>::Zero();
    b.h2(2) = -one / (R(4) * vprime_product);
    b.beta1 = b.alpha2;
    b.beta2 = -b.alpha1;
    return b;
  }

  template <int N>
  C checked_det(const Eigen::Matrix<C, N, N>& mat, const char* label) const {
    R hadamard(1);
    for (int i = 0; i < N; ++i) hadamard *= mat.col(i).norm();
    const C det = mat.determinant();
    if (!(hadamard > R(0)) || !(std::abs(det) > static_cast<R>(tol.singular_ratio) * hadamard))
      raise(ErrorCode::singular_transition,
            std::string("transition matrix ") + label + " is numerically singular");
    return det;
  }

  C oracle(C beta1, C beta2) const {
    const Basis b = basis();
    const V6<R> b1_first = beta1 * a_vec(1) + beta2 * a_vec(2);
    M66<R> t1;
    t1.template leftCols<3>() = delta0();
    t1.col(3) = b.h1;
    t1.col(4) = b1_first;
    t1.col(5) = a_vec(3);
    const C det1 = checked_det<6>(t1, "(delta0 b0, h1, b1)/c1");

    const M36<R> d1 = delta1();
    M3<R> t2;
    t2.col(0) = d1 * b1_first;
    t2.col(1) = d1 * a_vec(3);
    t2.col(2) = b.h2;
    const C det2 = checked_det<3>(t2, "(delta1 b1, h2)/c2");

    // [b0/c0] = 1 since b0 = c0.
    return det2 / det1;
  }

  C oracle() const {
    const Basis b = basis();
    return oracle(b.beta1, b.beta2);
  }

  C killing_form(const V3<R>& x, const V3<R>& y) const {
    return R(8) * x(1) * y(1) + R(4) * (x(0) * y(2) + x(2) * y(0));
  }

  std::pair<C, C> normalizations() const {
    const Basis b = basis();
    V3<R> p_vec;
    p_vec << C(R(1), R(0)), (d - C(R(1), R(0)) / d) / R(2), C();
    const C f1 = killing_form(p_vec, b.h1.template head<3>());

    // F2 differences two adjoint images whose entries grow with the square
    // of the word norms; quad precision keeps the cancellation exact well
    // past the 1e-9 acceptance threshold.
    const QComplex dq = to_quad(d);
    const QComplex uq = refine_root_quad_impl(data, dq, to_quad(u));
    const QMat2 from_wdagger = qconjugate_e3(qrho(data.words.w_dagger, dq, uq));
    const QMat2 from_vprime = qconjugate_e3(qrho(data.words.v_prime.inverse(), dq, uq));
    const QComplex x_b =
        ((from_wdagger.a11 - from_vprime.a11) - (from_wdagger.a22 - from_vprime.a22)) /
        QComplex{Quad(2), Quad(0)};
    const QComplex x_c = from_wdagger.a21 - from_vprime.a21;
    const QComplex one{Quad(1), Quad(0)};
    const QComplex four{Quad(4), Quad(0)};
    const QComplex h2_scale =
        (QComplex{} - one) / (four * qeval_mu(data.vprime11_phi_vprime, dq, uq));
    const QComplex pairing = four * (dq - one / dq) * x_b + four * x_c;
    const QComplex f2_quad = h2_scale * pairing;
    const C f2(static_cast<R>(static_cast<long double>(f2_quad.re)),
               static_cast<R>(static_cast<long double>(f2_quad.im)));
    return {f1, f2};
  }
};

}  // namespace

std::complex<double> killing(const Eigen::Vector3cd& x, const Eigen::Vector3cd& y) {
  return 8.0 * x(1) * y(1) + 4.0 * (x(0) * y(2) + x(2) * y(0));
}

Eigen::Matrix3cd adjoint_of(const Eigen::Matrix2cd& g) { return adjoint_matrix<double>(g); }

std::array<std::array<MultiPoly, 3>, 3> adjoint_of_poly(const PolyMat2& g) {
  const PolyMat2 inv{g.a22, -g.a12, -g.a21, g.a11};
  const std::array<PolyMat2, 3> basis = {
      PolyMat2{MultiPoly(), MultiPoly::constant(1), MultiPoly(), MultiPoly()},
      PolyMat2{MultiPoly::constant(1), MultiPoly(), MultiPoly(), MultiPoly::constant(-1)},
      PolyMat2{MultiPoly(), MultiPoly(), MultiPoly::constant(1), MultiPoly()}};
  std::array<std::array<MultiPoly, 3>, 3> ad;
  for (std::size_t i = 0; i < 3; ++i) {
    const PolyMat2 x = g * basis[i] * inv;
    if (!(x.a11 + x.a22).is_zero())
      raise(ErrorCode::internal, "conjugated basis element is not traceless");
    ad[0][i] = x.a12;
    ad[1][i] = x.a11;
    ad[2][i] = x.a21;
  }
  return ad;
}

Eigen::Matrix2cd rho_eval(const Word& word, std::complex<double> d, std::complex<double> u) {
  return rho_matrix<double>(word, d, u);
}

std::vector<FoxTerm> fox_derivative(const Word& word, int generator) {
  if (generator != 1 && generator != 2)
    raise(ErrorCode::invalid_argument, "generator must be 1 or 2");
  std::vector<FoxTerm> terms;
  Word prefix;
  for (const auto& s : word.syllables()) {
    if (s.generator == generator) {
      if (s.exponent == 1)
        terms.push_back(FoxTerm{1, prefix});
      else
        terms.push_back(FoxTerm{-1, prefix * Word::generator(generator, -1)});
    }
    prefix = prefix * Word::generator(s.generator, s.exponent);
  }
  return terms;
}

CochainData boundary_maps(const RileyData& data, const CharacterPoint& pt) {
  const Tolerances tol;
  OracleKernel<double> kernel(data, tol, pt.d, pt.u);
  CochainData cochain;
  cochain.delta0 = kernel.delta0();
  cochain.delta1 = kernel.delta1();
  return cochain;
}

void a_vectors(const RileyData& data, const CharacterPoint& pt, CochainData& cochain) {
  const Tolerances tol;
  OracleKernel<double> kernel(data, tol, pt.d, pt.u);
  cochain.a0 = kernel.a_vec(0);
  cochain.a1 = kernel.a_vec(1);
  cochain.a2 = kernel.a_vec(2);
  cochain.a3 = kernel.a_vec(3);
  cochain.alpha1 = data.alpha1.eval_mu(pt.d, pt.u);
  cochain.alpha2 = data.alpha2.eval_mu(pt.d, pt.u);
  const auto m_entries = relator_derivative_matrix(data).eval_mu(pt.d, pt.u);
  cochain.m_matrix << m_entries[0], m_entries[1], m_entries[2], m_entries[3];
}

void basis_construction(const RileyData& data, const CharacterPoint& pt, CochainData& cochain,
                        const Tolerances& tol) {
  OracleKernel<double> kernel(data, tol, pt.d, pt.u);
  const auto basis = kernel.basis();
  cochain.h1_rep = basis.h1;
  cochain.h2_rep = basis.h2;
  cochain.b1 = {basis.beta1 * kernel.a_vec(1) + basis.beta2 * kernel.a_vec(2), kernel.a_vec(3)};
  const std::complex<double> half_trace = (pt.d - 1.0 / pt.d) / 2.0;
  cochain.p_vector << 1.0, half_trace, 0.0;
}

CochainData assemble_cochain(const RileyData& data, const CharacterPoint& pt,
                             const Tolerances& tol) {
  CochainData cochain = boundary_maps(data, pt);
  a_vectors(data, pt, cochain);
  basis_construction(data, pt, cochain, tol);
  return cochain;
}

std::complex<double> torsion_oracle(const RileyData& data, const CharacterPoint& pt,
                                    const Tolerances& tol, Precision precision) {
  // The transition determinants cancel intermediate magnitudes that grow
  // like the square of the word images, so the oracle always runs on the
  // widest hardware floating point regardless of the pipeline precision.
  (void)precision;
  return narrow_c(OracleKernel<long double>(data, tol, pt.d, pt.u).oracle());
}

std::complex<double> torsion_oracle_with_b1(const RileyData& data, const CharacterPoint& pt,
                                            std::complex<double> beta1,
                                            std::complex<double> beta2, const Tolerances& tol) {
  using CL = std::complex<long double>;
  return narrow_c(OracleKernel<long double>(data, tol, pt.d, pt.u)
                      .oracle(CL(beta1.real(), beta1.imag()), CL(beta2.real(), beta2.imag())));
}

NormalizationChecks oracle_normalizations(const RileyData& data, const CharacterPoint& pt,
                                          const Tolerances& tol) {
  const auto [f1, f2] = OracleKernel<long double>(data, tol, pt.d, pt.u).normalizations();
  return NormalizationChecks{narrow_c(f1), narrow_c(f2)};
}

OracleComparison compare_oracle(const RileyData& data, int samples, std::uint64_t seed,
                                const Tolerances& tol, Precision precision) {
  if (samples < 1) raise(ErrorCode::invalid_argument, "samples must be >= 1");
  OracleComparison out;
  bool first = true;
  out.sign_constant = true;
  for (int s = 0; s < samples; ++s) {
    const auto sample =
        sample_generic(data, derive_seed(seed, static_cast<std::uint64_t>(s)), tol, precision);
    // Formula and oracle agree as functions only on the character variety,
    // so the comparison evaluates both at the oracle's internal precision.
    const TorsionReport report =
        torsion_spectrum(data, sample.c, tol, Precision::extended);
    for (std::size_t i = 0; i < report.points.size(); ++i) {
      OracleComparisonRow row;
      row.c = report.c;
      row.d = report.d;
      row.u = report.points[i].u;
      row.formula = report.torsions[i];
      row.oracle = torsion_oracle(data, report.points[i], tol, precision);
      row.magnitude_rel_diff = std::abs(std::abs(row.oracle) / std::abs(row.formula) - 1.0);
      row.ratio = row.oracle / row.formula;
      out.max_rel_diff = std::max(out.max_rel_diff, row.magnitude_rel_diff);
      if (first) {
        out.sign_value = row.ratio.real() >= 0.0 ? 1 : -1;
        first = false;
      }
      if (std::abs(row.ratio - std::complex<double>(out.sign_value, 0.0)) > 1e-6)
        out.sign_constant = false;
      out.rows.push_back(row);
    }
  }
  return out;
}

}  // namespace twobridge
