#include "twobridge/riley.hpp"

#include <string>

namespace twobridge {

PolyMat2 PolyMat2::identity() {
  return PolyMat2{MultiPoly::constant(1), MultiPoly(), MultiPoly(), MultiPoly::constant(1)};
}

PolyMat2 PolyMat2::operator*(const PolyMat2& rhs) const {
  return PolyMat2{a11 * rhs.a11 + a12 * rhs.a21, a11 * rhs.a12 + a12 * rhs.a22,
                  a21 * rhs.a11 + a22 * rhs.a21, a21 * rhs.a12 + a22 * rhs.a22};
}

MultiPoly PolyMat2::det() const { return a11 * a22 - a12 * a21; }

PolyMat2 PolyMat2::specialized() const {
  return PolyMat2{a11.specialize_symbolic(), a12.specialize_symbolic(),
                  a21.specialize_symbolic(), a22.specialize_symbolic()};
}

PolyMat2 rho_bar_generator(int generator, int exponent) {
  const MultiPoly one = MultiPoly::constant(1);
  if (generator == 1) {
    if (exponent == 1)
      return PolyMat2{MultiPoly::variable(Var::t1, 1), one, MultiPoly(),
                      MultiPoly::variable(Var::t1, -1)};
    return PolyMat2{MultiPoly::variable(Var::t1, -1), -one, MultiPoly(),
                    MultiPoly::variable(Var::t1, 1)};
  }
  if (exponent == 1)
    return PolyMat2{MultiPoly::variable(Var::t2, 1), MultiPoly(),
                    -MultiPoly::variable(Var::t3, 1), MultiPoly::variable(Var::t2, -1)};
  return PolyMat2{MultiPoly::variable(Var::t2, -1), MultiPoly(),
                  MultiPoly::variable(Var::t3, 1), MultiPoly::variable(Var::t2, 1)};
}

PolyMat2 rho_bar_of_word(const Word& word) {
  PolyMat2 acc = PolyMat2::identity();
  for (const auto& s : word.syllables()) acc = acc * rho_bar_generator(s.generator, s.exponent);
  return acc;
}

MultiPoly phi_of_mat(const PolyMat2& mat) {
  return mat.a11 - m_minus_m_inverse() * mat.a12;
}

RileyData riley_polynomial(const SchubertForm& f) {
  RileyData data;
  data.form = f;
  data.words = build_words(f);
  const auto idx = find_k(f);
  data.k = idx.k;
  data.eps_k = idx.eps_k;

  data.rho_bar_w = rho_bar_of_word(data.words.w);
  data.rho_w = data.rho_bar_w.specialized();
  data.rho_v = rho_bar_of_word(data.words.v).specialized();
  data.rho_vprime = rho_bar_of_word(data.words.v_prime).specialized();
  data.rho_y = rho_bar_of_word(data.words.y).specialized();
  data.rho_wdagger = rho_bar_of_word(data.words.w_dagger).specialized();

  data.phi_bar_w = data.rho_bar_w.a11 -
                   (MultiPoly::variable(Var::t1, 1) - MultiPoly::variable(Var::t1, -1)) *
                       data.rho_bar_w.a12;
  data.phi_w = phi_of_mat(data.rho_w);
  data.phi_v = phi_of_mat(data.rho_v);
  data.phi_vprime = phi_of_mat(data.rho_vprime);
  data.dphi_dm = data.phi_w.partial(Var::t1);
  data.dphi_du = data.phi_w.partial(Var::t3);
  data.alpha1 = data.phi_bar_w.partial(Var::t1).specialize_symbolic();
  data.alpha2 = data.phi_bar_w.partial(Var::t2).specialize_symbolic();
  data.v11_phi_v = data.rho_v.a11 * data.phi_v;
  data.vprime11_phi_vprime = data.rho_vprime.a11 * data.phi_vprime;

  const int expected_degree = (f.p - 1) / 2;
  const MultiPoly lead = data.phi_w.leading_u_coeff();
  if (data.phi_w.degree_u() != expected_degree ||
      (lead != MultiPoly::constant(1) && lead != MultiPoly::constant(-1)))
    raise(ErrorCode::internal, "Riley polynomial degree/leading-coefficient invariant violated");
  return data;
}

PolyMat2 relator_derivative_matrix(const RileyData& data) {
  const MultiPoly u = MultiPoly::var_u();
  const MultiPoly m = MultiPoly::var_m(1);
  const MultiPoly m_inv = MultiPoly::var_m(-1);
  const auto& w = data.rho_w;
  return PolyMat2{w.a11 * u - w.a21 * m_inv, w.a11 * m, w.a21 * u + w.a22 * u * m_inv,
                  w.a21 * m};
}

RileyIdentityChecks verify_riley_identities(const RileyData& data) {
  RileyIdentityChecks checks;
  const auto& w = data.rho_w;
  checks.det_w_is_one = w.det() == MultiPoly::constant(1);
  checks.u_w12_plus_w21_zero = (MultiPoly::var_u() * w.a12 + w.a21).is_zero();

  const auto& wd = data.rho_wdagger;
  checks.dagger_identity = data.phi_w == wd.a22 + m_minus_m_inverse() * wd.a12;

  const PolyMat2 m_mat = relator_derivative_matrix(data);
  const PolyMat2 rho_r = rho_bar_of_word(data.words.r).specialized();
  const PolyMat2 expected{MultiPoly::constant(1) + data.phi_w * m_mat.a11,
                          data.phi_w * m_mat.a12, data.phi_w * m_mat.a21,
                          MultiPoly::constant(1) + data.phi_w * m_mat.a22};
  checks.relator_identity = rho_r == expected;

  const MultiPoly scale =
      data.eps_k == 1 ? MultiPoly::constant(1) : MultiPoly::var_m(1) * MultiPoly::var_m(1);
  checks.vprime_identity = data.vprime11_phi_vprime == scale * data.v11_phi_v;

  const MultiPoly lead = data.phi_w.leading_u_coeff();
  checks.degree_and_leading =
      data.phi_w.degree_u() == (data.form.p - 1) / 2 &&
      (lead == MultiPoly::constant(1) || lead == MultiPoly::constant(-1));
  return checks;
}

LeadingProfile leading_profile(const Word& word) {
  const auto& syl = word.syllables();
  if (syl.empty() || syl.size() % 2 != 0)
    raise(ErrorCode::malformed_word, "leading_profile needs a nonempty word of even length");
  for (std::size_t i = 0; i < syl.size(); ++i) {
    const int expected_gen = i % 2 == 0 ? 1 : 2;
    if (syl[i].generator != expected_gen)
      raise(ErrorCode::malformed_word, "leading_profile needs alternating g1 g2 syllables");
  }

  const int j = static_cast<int>(syl.size()) / 2;
  PolyMat2 mat = rho_bar_of_word(word).specialized();

  // The (1,1) entry is +-(u^j + ...) with a constant leading coefficient;
  // force it monic and apply the same sign to the whole matrix.
  MultiPoly lead11 = mat.a11.coeff_of_u(j);
  int sign = 1;
  if (lead11 == MultiPoly::constant(-1)) {
    sign = -1;
    mat = PolyMat2{-mat.a11, -mat.a12, -mat.a21, -mat.a22};
  } else if (lead11 != MultiPoly::constant(1)) {
    raise(ErrorCode::internal, "leading u-coefficient of entry (1,1) is not +-1");
  }

  LeadingProfile profile;
  profile.half_length = j;
  profile.sign = sign;
  const std::array<const MultiPoly*, 4> entries{&mat.a11, &mat.a12, &mat.a21, &mat.a22};
  for (std::size_t i = 0; i < 4; ++i) {
    profile.u_degree[i] = entries[i]->degree_u();
    profile.leading[i] = entries[i]->leading_u_coeff();
  }

  // A_j - B_j: sub-leading u-coefficients of entries (1,1) and (2,1) after
  // normalizing both leading coefficients to 1. The (2,1) leading term is the
  // monomial f1 m^{-f1}, so the normalization is an exact Laurent shift.
  const MultiPoly a_j = mat.a11.coeff_of_u(j - 1);
  const auto [lead21_exp, lead21_coeff] = mat.a21.leading_u_coeff().single_term();
  if (lead21_coeff != 1 && lead21_coeff != -1)
    raise(ErrorCode::internal, "leading u-coefficient of entry (2,1) is not a unit monomial");
  MultiPoly b_j = mat.a21.coeff_of_u(profile.u_degree[2] - 1)
                      .scaled(lead21_coeff)  // unit, so this divides by it
                  * MultiPoly::monomial(1, Exponents{-lead21_exp.e1, -lead21_exp.e2, 0});
  profile.subleading_diff = a_j - b_j;
  return profile;
}

}  // namespace twobridge
