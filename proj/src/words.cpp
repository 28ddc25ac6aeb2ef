#include "twobridge/words.hpp"

#include <algorithm>

namespace twobridge {

Word::Word(std::vector<Syllable> syllables) : syllables_(std::move(syllables)) {
  for (const auto& s : syllables_) {
    if ((s.generator != 1 && s.generator != 2) || (s.exponent != 1 && s.exponent != -1))
      raise(ErrorCode::malformed_word, "syllables must be g1^{+-1} or g2^{+-1}");
  }
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Syllable> out = syllables_;
  out.insert(out.end(), rhs.syllables_.begin(), rhs.syllables_.end());
  Word w;
  w.syllables_ = std::move(out);
  return w;
}

Word Word::inverse() const {
  std::vector<Syllable> out;
  out.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    out.push_back(Syllable{it->generator, -it->exponent});
  Word w;
  w.syllables_ = std::move(out);
  return w;
}

Word Word::exchanged() const {
  std::vector<Syllable> out = syllables_;
  for (auto& s : out) s.generator = 3 - s.generator;
  Word w;
  w.syllables_ = std::move(out);
  return w;
}

Word Word::reduced() const {
  std::vector<Syllable> stack;
  for (const auto& s : syllables_) {
    if (!stack.empty() && stack.back().generator == s.generator &&
        stack.back().exponent == -s.exponent) {
      stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  Word w;
  w.syllables_ = std::move(stack);
  return w;
}

std::string Word::render() const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += ' ';
    out += s.generator == 1 ? "g1" : "g2";
    if (s.exponent == -1) out += "^-1";
  }
  return out;
}

}  // namespace twobridge
