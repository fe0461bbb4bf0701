#include "ellsurf/legendre_sums.hpp"

namespace ellsurf {

ZZ factorizable_sum(const ZZ& n1, const ZZ& n2, const ZZ& p) {
  check_odd_prime(p, "factorizable_sum");
  return (n1 - n2) % p == 0 ? p - 1 : ZZ(-1);
}

QuadSumResult complete_quadratic_sum(const ZZ& a, const ZZ& b, const ZZ& c, const ZZ& p) {
  check_odd_prime(p, "quadratic_sum");
  const bool a0 = a % p == 0, b0 = b % p == 0;
  if (a0 && b0) return {p * legendre_symbol(c, p), QuadSumBranch::degenerate_constant};
  if (a0) return {ZZ(0), QuadSumBranch::degenerate_linear};
  ZZ disc = b * b - 4 * a * c;
  if (disc % p == 0) return {(p - 1) * legendre_symbol(a, p), QuadSumBranch::discriminant_divisible};
  return {ZZ(-legendre_symbol(a, p)), QuadSumBranch::generic};
}

QuadSumResult quadratic_sum(const ZZ& a, const ZZ& b, const ZZ& c, const ZZ& p) {
  QuadSumResult r = complete_quadratic_sum(a, b, c, p);
  if (r.branch == QuadSumBranch::degenerate_constant)
    throw input_error("quadratic_sum: a and b both vanish mod p");
  return r;
}

ZZ brute_force_char_sum(const PolyZ& f, uint32_t p) {
  auto chi = quadratic_character_table(p);
  auto coeffs = reduce_poly(f, p);
  long acc = 0;
  for (uint32_t t = 0; t < p; ++t) acc += chi[eval_mod(coeffs, t, p)];
  return ZZ(acc);
}

}  // namespace ellsurf
