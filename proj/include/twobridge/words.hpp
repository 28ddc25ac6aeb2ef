#pragma once

#include <string>
#include <vector>

#include "twobridge/errors.hpp"

namespace twobridge {

struct Syllable {
  int generator;  // 1 or 2
  int exponent;   // +1 or -1
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Word in the free group on g1, g2, stored as written (unreduced) so that
/// Fox calculus and base-point bookkeeping see the literal syllable
/// sequences. Free reduction is available on demand.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables);

  static Word generator(int gen, int exp = 1) { return Word({Syllable{gen, exp}}); }

  bool empty() const { return syllables_.empty(); }
  std::size_t size() const { return syllables_.size(); }
  const std::vector<Syllable>& syllables() const { return syllables_; }

  Word operator*(const Word& rhs) const;  // concatenation
  Word inverse() const;
  Word exchanged() const;  // g1 <-> g2
  Word reduced() const;    // free reduction

  /// "g1 g2^-1 g1^-1 g2"; the empty word renders as "1".
  std::string render() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Syllable> syllables_;
};

}  // namespace twobridge
