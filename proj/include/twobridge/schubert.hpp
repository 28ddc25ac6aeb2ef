#pragma once

#include <vector>

#include "twobridge/errors.hpp"
#include "twobridge/words.hpp"

namespace twobridge {

/// Schubert normal form (p, q): relatively prime odd integers with p > 0 and
/// -p < q < p. Torus knots are exactly q = +-1; everything else is
/// hyperbolic.
struct SchubertForm {
  int p = 0;
  int q = 0;
  friend bool operator==(const SchubertForm&, const SchubertForm&) = default;
};

SchubertForm validate_form(int p, int q);  // throws InvalidForm

inline bool is_torus(const SchubertForm& f) { return f.q == 1 || f.q == -1; }

/// eps_i = (-1)^floor(i q / p) for i = 1..p-1, floor toward -infinity.
std::vector<int> epsilon_sequence(const SchubertForm& f);

struct MeridianIndex {
  int k = 0;
  int eps_k = 0;
};

/// The unique odd 0 < k < p with k q = +-1 (mod 2p), found by scanning every
/// integer in range; NotFound if the scan does not produce exactly one odd
/// solution (impossible for valid forms).
MeridianIndex find_k(const SchubertForm& f);

struct WordSet {
  Word w;         // g1^{e1} g2^{e2} ... g2^{e_{p-1}}
  Word v;         // first k-1 syllables of w (empty when k = 1)
  Word v_prime;   // base-point change word
  Word y;         // syllables k..p-1, so that w = v y literally
  Word w_dagger;  // w with g1 and g2 exchanged
  Word r;         // w g1 w^{-1} g2^{-1}
};

WordSet build_words(const SchubertForm& f);

}  // namespace twobridge
