#pragma once

#include <array>
#include <complex>

#include "twobridge/poly.hpp"
#include "twobridge/schubert.hpp"
#include "twobridge/words.hpp"

namespace twobridge {

/// 2x2 matrix over MultiPoly. Images of words under the representation have
/// determinant 1 as an exact polynomial identity.
struct PolyMat2 {
  MultiPoly a11, a12, a21, a22;

  static PolyMat2 identity();
  PolyMat2 operator*(const PolyMat2& rhs) const;
  MultiPoly det() const;
  PolyMat2 specialized() const;  // entry-wise t1 = t2 = m, t3 = u

  template <class R>
  std::array<std::complex<R>, 4> eval_mu(std::complex<R> m, std::complex<R> u) const {
    return {a11.eval_mu(m, u), a12.eval_mu(m, u), a21.eval_mu(m, u), a22.eval_mu(m, u)};
  }

  bool operator==(const PolyMat2&) const = default;
};

/// Generator images of the three-variable lift: g1 -> [[t1,1],[0,t1^-1]],
/// g2 -> [[t2,0],[-t3,t2^-1]]; inverses are exact adjugates.
PolyMat2 rho_bar_generator(int generator, int exponent);
PolyMat2 rho_bar_of_word(const Word& word);

/// a11 - (m - m^{-1}) a12 of a specialized matrix.
MultiPoly phi_of_mat(const PolyMat2& specialized_mat);

/// Everything the torsion formula needs about one knot, computed exactly.
struct RileyData {
  SchubertForm form;
  WordSet words;
  int k = 0;
  int eps_k = 0;

  PolyMat2 rho_bar_w;  // three-variable image of w
  PolyMat2 rho_w, rho_v, rho_vprime, rho_y, rho_wdagger;

  MultiPoly phi_bar_w;  // w11 - (t1 - t1^-1) w12 in three variables
  MultiPoly phi_w;      // the Riley polynomial
  MultiPoly phi_v, phi_vprime;
  MultiPoly dphi_dm, dphi_du;
  MultiPoly alpha1, alpha2;  // partials of phi_bar_w wrt t1/t2, specialized
  MultiPoly v11_phi_v;       // v11 * phi_v
  MultiPoly vprime11_phi_vprime;
};

RileyData riley_polynomial(const SchubertForm& f);

/// The common 2x2 factor M of the relator identity rho(r) = I + phi_w M.
PolyMat2 relator_derivative_matrix(const RileyData& data);

struct RileyIdentityChecks {
  bool det_w_is_one = false;
  bool u_w12_plus_w21_zero = false;
  bool dagger_identity = false;   // phi_w = wd22 + (m - m^-1) wd12
  bool relator_identity = false;  // rho(r) = I + phi_w M
  bool vprime_identity = false;   // v'11 phi_v' = m^{1-eps_k} v11 phi_v
  bool degree_and_leading = false;
  bool all() const {
    return det_w_is_one && u_w12_plus_w21_zero && dagger_identity && relator_identity &&
           vprime_identity && degree_and_leading;
  }
};

RileyIdentityChecks verify_riley_identities(const RileyData& data);

/// Leading-term structure of an alternating word g1^{f1} g2^{f2} ... of even
/// length 2j; the global sign is normalized so entry (1,1) is monic in u.
struct LeadingProfile {
  int half_length = 0;              // j
  int sign = 1;                     // normalization applied to the matrix
  std::array<int, 4> u_degree{};    // entries (11, 12, 21, 22)
  std::array<MultiPoly, 4> leading; // leading u-coefficients, Laurent in m
  MultiPoly subleading_diff;        // A_j - B_j
};

LeadingProfile leading_profile(const Word& word);  // throws MalformedWord

}  // namespace twobridge
