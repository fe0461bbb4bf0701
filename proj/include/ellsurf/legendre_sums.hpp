// Closed forms for the linear and quadratic Legendre sums, with brute-force
// oracles used as test-time ground truth.
#pragma once

#include "ellsurf/poly.hpp"

namespace ellsurf {

enum class QuadSumBranch {
  discriminant_divisible,  // p | (b^2 - 4ac): sum = (p-1)(a/p)
  generic,                 // otherwise:       sum = -(a/p)
  degenerate_linear,       // a = 0, b != 0 mod p: full linear sum = 0
  degenerate_constant,     // a = b = 0 mod p: sum = p * (c/p)
};

struct QuadSumResult {
  ZZ value;
  QuadSumBranch branch;
};

// sum_{x mod p} ((n1+x)/p) ((n2+x)/p): p-1 when p | (n1-n2), else -1.
ZZ factorizable_sum(const ZZ& n1, const ZZ& n2, const ZZ& p);

// sum_{t mod p} ((a t^2 + b t + c)/p). Requires (a,b) != (0,0) mod p.
QuadSumResult quadratic_sum(const ZZ& a, const ZZ& b, const ZZ& c, const ZZ& p);

// Same sum with no precondition; a = b = 0 yields the degenerate_constant
// branch with value p * (c/p). Internal helper for the certificate ledger.
QuadSumResult complete_quadratic_sum(const ZZ& a, const ZZ& b, const ZZ& c, const ZZ& p);

// sum_{t=0}^{p-1} ((f(t))/p) by direct evaluation (test oracle).
ZZ brute_force_char_sum(const PolyZ& f, uint32_t p);

}  // namespace ellsurf
