#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "twobridge/config.hpp"
#include "twobridge/riley.hpp"
#include "twobridge/torsion.hpp"

namespace twobridge {

/// Killing form in (e1, e2, e3) coordinates: an element a e1 + b e2 + c e3
/// is the matrix [[b, a], [c, -b]] and <X, Y> = 8 b b' + 4 (a c' + c a').
std::complex<double> killing(const Eigen::Vector3cd& x, const Eigen::Vector3cd& y);

/// Adjoint action of a unimodular 2x2 matrix on sl2 in the (e1, e2, e3)
/// basis; column i holds the coordinates of g e_i g^{-1}. The unimodularity
/// check is scale-aware: |det g - 1| <= 1e-10 * max(1, |g|_inf^2).
Eigen::Matrix3cd adjoint_of(const Eigen::Matrix2cd& g);

/// Symbolic adjoint of a specialized word image; [row][col] with rows in
/// (e1, e2, e3) coordinate order.
std::array<std::array<MultiPoly, 3>, 3> adjoint_of_poly(const PolyMat2& g);

/// Numeric image of a word under rho at (d, u).
Eigen::Matrix2cd rho_eval(const Word& word, std::complex<double> d, std::complex<double> u);

struct FoxTerm {
  int sign;     // +1 or -1
  Word prefix;  // group element multiplying the term
};

/// Free differential: d(uv)/dg = du/dg + u dv/dg, dg/dg = 1,
/// d(g^-1)/dg = -g^-1, dh/dg = 0 for h != g.
std::vector<FoxTerm> fox_derivative(const Word& word, int generator);

using Vec6cd = Eigen::Matrix<std::complex<double>, 6, 1>;
using Mat63cd = Eigen::Matrix<std::complex<double>, 6, 3>;
using Mat36cd = Eigen::Matrix<std::complex<double>, 3, 6>;

/// The twisted cochain complex of the presentation 2-complex at one
/// character, together with the deformation vectors and normalized bases
/// used by the transition-determinant torsion.
struct CochainData {
  Mat63cd delta0;
  Mat36cd delta1;
  Vec6cd a0, a1, a2, a3;
  std::complex<double> alpha1{}, alpha2{};
  Eigen::Matrix2cd m_matrix;
  Eigen::Vector3cd p_vector;
  Vec6cd h1_rep;
  Eigen::Vector3cd h2_rep;
  std::pair<Vec6cd, Vec6cd> b1;
};

/// delta0 stacks Ad(rho(g_i)) - I; delta1 concatenates the Fox blocks of the
/// relator.
CochainData boundary_maps(const RileyData& data, const CharacterPoint& pt);

/// Fills a0..a3 (deformation vectors), alpha1/alpha2, and the 2x2 matrix M.
void a_vectors(const RileyData& data, const CharacterPoint& pt, CochainData& cochain);

/// Fills h1_rep, h2_rep, b1, and P; throws DegeneratePoint when the
/// normalizations divide by a sub-tolerance quantity.
void basis_construction(const RileyData& data, const CharacterPoint& pt, CochainData& cochain,
                        const Tolerances& tol);

CochainData assemble_cochain(const RileyData& data, const CharacterPoint& pt,
                             const Tolerances& tol);

/// First-principles adjoint torsion: the product of transition determinants
///   [b0/c0] * [(delta0 b0, h1, b1)/c1]^{-1} * [(delta1 b1, h2)/c2].
/// Equals the closed-form value up to one global sign per knot.
std::complex<double> torsion_oracle(const RileyData& data, const CharacterPoint& pt,
                                    const Tolerances& tol,
                                    Precision precision = Precision::standard);

struct NormalizationChecks {
  std::complex<double> f1;  // <P, h1(g1-lift)>, should be 1
  std::complex<double> f2;  // <P, (-Ad(rho(v')^{-1}) + Ad(rho(w_dagger))) h2>, should be 1
};

/// F1/F2 evaluated with the oracle's internal precision (the h2 pairing
/// cancels magnitudes that grow with the word images, so a plain double
/// assembly cannot reach the 1e-9 acceptance threshold at larger p).
NormalizationChecks oracle_normalizations(const RileyData& data, const CharacterPoint& pt,
                                          const Tolerances& tol);

/// Same computation with a caller-chosen admissible pair (beta1, beta2); used
/// to verify independence of that choice.
std::complex<double> torsion_oracle_with_b1(const RileyData& data, const CharacterPoint& pt,
                                            std::complex<double> beta1,
                                            std::complex<double> beta2, const Tolerances& tol);

struct OracleComparisonRow {
  std::complex<double> c, d, u;
  std::complex<double> formula, oracle;
  double magnitude_rel_diff = 0.0;  // | |oracle| / |formula| - 1 |
  std::complex<double> ratio;       // oracle / formula
};

struct OracleComparison {
  std::vector<OracleComparisonRow> rows;
  double max_rel_diff = 0.0;
  bool sign_constant = false;
  int sign_value = 0;  // +1 or -1 when sign_constant
};

OracleComparison compare_oracle(const RileyData& data, int samples, std::uint64_t seed,
                                const Tolerances& tol,
                                Precision precision = Precision::standard);

}  // namespace twobridge
