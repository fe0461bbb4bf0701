#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellsurf/legendre_sums.hpp"

using namespace ellsurf;

namespace {

ZZ brute_factorizable(uint32_t n1, uint32_t n2, uint32_t p) {
  auto chi = quadratic_character_table(p);
  long acc = 0;
  for (uint32_t x = 0; x < p; ++x) acc += chi[(n1 + x) % p] * chi[(n2 + x) % p];
  return ZZ(acc);
}

}  // namespace

TEST_CASE("factorizable sum closed form") {
  CHECK(factorizable_sum(3, 3, 7) == 6);    // p | (n1 - n2)
  CHECK(factorizable_sum(0, 1, 5) == -1);   // otherwise
  CHECK_THROWS_AS(factorizable_sum(0, 0, 2), input_error);
  for (uint32_t p : {3u, 5u, 7u, 11u, 13u})
    for (uint32_t n1 = 0; n1 < p; ++n1)
      for (uint32_t n2 = 0; n2 < p; ++n2)
        CHECK(factorizable_sum(n1, n2, p) == brute_factorizable(n1, n2, p));
}

TEST_CASE("quadratic sum closed form on the lemma's example branches") {
  auto r = quadratic_sum(1, 0, 0, 7);
  CHECK(r.value == 6);
  CHECK(r.branch == QuadSumBranch::discriminant_divisible);
  r = quadratic_sum(1, 0, -1, 7);
  CHECK(r.value == -1);
  CHECK(r.branch == QuadSumBranch::generic);
  r = quadratic_sum(0, 1, 5, 7);
  CHECK(r.value == 0);
  CHECK(r.branch == QuadSumBranch::degenerate_linear);
  CHECK_THROWS_AS(quadratic_sum(7, 14, 3, 7), input_error);
  auto c = complete_quadratic_sum(0, 0, 3, 7);
  CHECK(c.branch == QuadSumBranch::degenerate_constant);
  CHECK(c.value == -7);
}

TEST_CASE("quadratic sum agrees with brute force on random tuples") {
  std::vector<uint32_t> primes = {3, 5, 7, 11, 13, 31, 101};
  uint64_t seed = 1234567;
  for (uint32_t p : primes) {
    for (int iter = 0; iter < 200; ++iter) {
      seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
      uint32_t a = uint32_t(seed >> 33) % p;
      uint32_t b = uint32_t(seed >> 13) % p;
      uint32_t c = uint32_t(seed >> 3) % p;
      if (a == 0 && b == 0) continue;
      CHECK(quadratic_sum(a, b, c, p).value == brute_force_char_sum(PolyZ{c, b, a}, p));
    }
  }
}

TEST_CASE("brute force char sums on trivial examples") {
  CHECK(brute_force_char_sum(PolyZ{0, 0, 1}, 5) == 4);  // t^2: each t != 0 gives +1
  CHECK(brute_force_char_sum(PolyZ{0, 1}, 7) == 0);     // full character sum
}

TEST_CASE("sum over t of ((t^2 - delta)/p) is constant on non-squares") {
  for (uint32_t p : primes_up_to(100)) {
    if (p == 2) continue;
    auto chi = quadratic_character_table(p);
    long expected = 2;  // sentinel
    for (uint32_t delta = 1; delta < p; ++delta) {
      if (chi[delta] != -1) continue;
      long s = 0;
      for (uint32_t t = 0; t < p; ++t) s += chi[(uint64_t(t) * t + p - delta) % p];
      if (expected == 2) expected = s;
      CHECK(s == expected);
    }
    CHECK(expected == -1);  // the proof pins the common value to -1
  }
}
