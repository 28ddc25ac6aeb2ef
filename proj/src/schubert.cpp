#include "twobridge/schubert.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

namespace twobridge {

namespace {

// Floor division toward -infinity; b > 0.
long long floor_div(long long a, long long b) {
  long long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

}  // namespace

SchubertForm validate_form(int p, int q) {
  auto fail = [&](const std::string& why) {
    raise(ErrorCode::invalid_form,
          "(" + std::to_string(p) + ", " + std::to_string(q) + "): " + why);
  };
  if (p <= 0) fail("p must be positive");
  if (p % 2 == 0) fail("p must be odd");
  if (std::abs(q) % 2 != 1) fail("q must be odd");
  if (!(-p < q && q < p)) fail("q must satisfy -p < q < p");
  if (std::gcd(p, std::abs(q)) != 1) fail("p and q must be relatively prime");
  return SchubertForm{p, q};
}

std::vector<int> epsilon_sequence(const SchubertForm& f) {
  std::vector<int> eps;
  eps.reserve(static_cast<std::size_t>(f.p - 1));
  for (int i = 1; i <= f.p - 1; ++i) {
    long long fl = floor_div(static_cast<long long>(i) * f.q, f.p);
    eps.push_back((((fl % 2) + 2) % 2) == 0 ? 1 : -1);
  }
  return eps;
}

MeridianIndex find_k(const SchubertForm& f) {
  const long long mod = 2LL * f.p;
  int found = 0;
  int count = 0;
  for (int k = 1; k < f.p; ++k) {
    long long r = ((static_cast<long long>(k) * f.q) % mod + mod) % mod;
    if (r == 1 || r == mod - 1) {
      found = k;
      ++count;
    }
  }
  if (count != 1 || found % 2 != 1)
    raise(ErrorCode::not_found, "no unique odd k with k q = +-1 (mod 2p) for (" +
                                    std::to_string(f.p) + ", " + std::to_string(f.q) + ")");
  const auto eps = epsilon_sequence(f);
  return MeridianIndex{found, eps[static_cast<std::size_t>(found - 1)]};
}

WordSet build_words(const SchubertForm& f) {
  const auto eps = epsilon_sequence(f);
  const auto [k, eps_k] = find_k(f);

  std::vector<Syllable> w_syl;
  w_syl.reserve(eps.size());
  for (int i = 1; i <= f.p - 1; ++i)
    w_syl.push_back(Syllable{i % 2 == 1 ? 1 : 2, eps[static_cast<std::size_t>(i - 1)]});

  WordSet words;
  words.w = Word(w_syl);
  words.v = Word({w_syl.begin(), w_syl.begin() + (k - 1)});
  words.y = Word({w_syl.begin() + (k - 1), w_syl.end()});
  if (eps_k == 1) {
    words.v_prime = words.v;
  } else {
    words.v_prime = Word::generator(2) * words.v * Word::generator(1, eps_k);
  }
  words.w_dagger = words.w.exchanged();
  words.r = words.w * Word::generator(1) * words.w.inverse() * Word::generator(2, -1);
  return words;
}

}  // namespace twobridge
