#include <doctest.h>

#include <cmath>
#include <array>
#include <numeric>
#include <set>

#include "twobridge/schubert.hpp"

using namespace twobridge;

namespace {

std::vector<SchubertForm> all_valid_forms(int max_p) {
  std::vector<SchubertForm> forms;
  for (int p = 3; p <= max_p; p += 2)
    for (int q = -p + 1; q < p; ++q) {
      if (std::abs(q) % 2 != 1) continue;
      if (std::gcd(p, std::abs(q)) != 1) continue;
      forms.push_back(SchubertForm{p, q});
    }
  return forms;
}

}  // namespace

TEST_CASE("validate: accepted and rejected forms") {
  CHECK(validate_form(5, 3) == SchubertForm{5, 3});
  CHECK(validate_form(5, -3) == SchubertForm{5, -3});
  CHECK_THROWS_AS(validate_form(4, 1), Error);   // p even
  CHECK_THROWS_AS(validate_form(9, 3), Error);   // gcd 3
  CHECK_THROWS_AS(validate_form(5, 2), Error);   // q even
  CHECK_THROWS_AS(validate_form(5, 5), Error);   // out of range
  CHECK_THROWS_AS(validate_form(5, -7), Error);  // out of range
  CHECK_THROWS_AS(validate_form(-3, 1), Error);  // p negative
  try {
    validate_form(9, 3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_form);
    CHECK(e.invalid_input());
  }
}

TEST_CASE("epsilon sequence examples") {
  CHECK(epsilon_sequence(validate_form(3, 1)) == std::vector<int>{1, 1});
  CHECK(epsilon_sequence(validate_form(5, 3)) == std::vector<int>{1, -1, -1, 1});
  CHECK(epsilon_sequence(validate_form(7, 3)) == std::vector<int>{1, 1, -1, -1, 1, 1});
}

TEST_CASE("epsilon sequence: floor toward -infinity for negative q") {
  for (const auto& f : all_valid_forms(31)) {
    const auto eps = epsilon_sequence(f);
    REQUIRE(eps.size() == static_cast<std::size_t>(f.p - 1));
    for (int i = 1; i <= f.p - 1; ++i) {
      const long long fl =
          static_cast<long long>(std::floor(static_cast<long double>(i) * f.q / f.p));
      const int expected = ((fl % 2) + 2) % 2 == 0 ? 1 : -1;
      CHECK(eps[static_cast<std::size_t>(i - 1)] == expected);
    }
  }
}

TEST_CASE("find_k examples") {
  for (int p : {3, 5, 7, 9, 11}) {
    CHECK(find_k(validate_form(p, 1)).k == 1);
    CHECK(find_k(validate_form(p, -1)).k == 1);
  }
  const auto k53 = find_k(validate_form(5, 3));
  CHECK(k53.k == 3);
  CHECK(k53.eps_k == -1);  // 3*3 = 9 = -1 (mod 10)
  const auto k73 = find_k(validate_form(7, 3));
  CHECK(k73.k == 5);
  CHECK(k73.eps_k == 1);  // 3*5 = 15 = 1 (mod 14)
}

TEST_CASE("find_k: unique odd solution over the full scan, p <= 99") {
  for (const auto& f : all_valid_forms(99)) {
    const auto idx = find_k(f);
    CHECK(idx.k % 2 == 1);
    CHECK(idx.k > 0);
    CHECK(idx.k < f.p);
    // independent re-scan including even candidates
    int count = 0;
    const long long mod = 2LL * f.p;
    for (int k = 1; k < f.p; ++k) {
      const long long r = ((static_cast<long long>(k) * f.q) % mod + mod) % mod;
      if (r == 1 || r == mod - 1) ++count;
    }
    CHECK(count == 1);
  }
}

TEST_CASE("build_words examples") {
  {
    const auto words = build_words(validate_form(3, 1));
    CHECK(words.w.render() == "g1 g2");
    CHECK(words.v.empty());
    CHECK(words.y == words.w);
    CHECK(words.v_prime.empty());  // eps_k = +1
  }
  {
    const auto words = build_words(validate_form(5, 3));
    CHECK(words.w.render() == "g1 g2^-1 g1^-1 g2");
    CHECK(words.v.render() == "g1 g2^-1");
    CHECK(words.v_prime.render() == "g2 g1 g2^-1 g1^-1");
    CHECK(words.y.render() == "g1^-1 g2");
    CHECK(words.w_dagger.render() == "g2 g1^-1 g2^-1 g1");
    CHECK(words.r.render() == "g1 g2^-1 g1^-1 g2 g1 g2^-1 g1 g2 g1^-1 g2^-1");
  }
}

TEST_CASE("w = v y literally for all valid forms, p <= 99") {
  for (const auto& f : all_valid_forms(99)) {
    const auto words = build_words(f);
    CHECK(words.v * words.y == words.w);
    CHECK(words.w.size() == static_cast<std::size_t>(f.p - 1));
    CHECK(words.w_dagger == words.w.exchanged());
    CHECK(words.r == words.w * Word::generator(1) * words.w.inverse() * Word::generator(2, -1));
  }
}

TEST_CASE("hyperbolic sign patterns around k avoid the forbidden triples") {
  const std::set<std::array<int, 3>> forbidden = {
      {1, 1, 1}, {-1, -1, -1}, {1, -1, 1}, {-1, 1, -1}};
  for (const auto& f : all_valid_forms(99)) {
    if (f.q == 1 || f.q == -1) continue;
    const auto idx = find_k(f);
    CHECK(idx.k >= 3);
    CHECK(idx.k <= f.p - 2);
    const auto eps = epsilon_sequence(f);
    const std::array<int, 3> pattern{eps[static_cast<std::size_t>(idx.k - 2)],
                                     eps[static_cast<std::size_t>(idx.k - 1)],
                                     eps[static_cast<std::size_t>(idx.k)]};
    CHECK(forbidden.count(pattern) == 0);
  }
}

TEST_CASE("word utilities: inverse, exchange, reduction, rendering") {
  const Word w = Word::generator(1) * Word::generator(2, -1) * Word::generator(1, -1);
  CHECK(w.render() == "g1 g2^-1 g1^-1");
  CHECK(w.inverse().render() == "g1 g2 g1^-1");
  CHECK(w.exchanged().render() == "g2 g1^-1 g2^-1");
  CHECK((w * w.inverse()).reduced().empty());
  CHECK(Word().render() == "1");
  CHECK_THROWS_AS(Word({Syllable{3, 1}}), Error);
  CHECK_THROWS_AS(Word({Syllable{1, 2}}), Error);
}
