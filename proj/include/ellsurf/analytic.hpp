// Fiber point counts a_t(p), Nagao averages A_E(p), the exact 6p ledger for
// the rank-6 surface, and Rosen-Silverman partial sums.
#pragma once

#include <functional>

#include "ellsurf/surface.hpp"

namespace ellsurf {

inline constexpr uint32_t kKernelPrimeBound = 0x7fffffffu;  // 64-bit products stay exact below 2^31

struct FiberCount {
  uint32_t p = 0;
  uint32_t t = 0;
  ZZ N;      // projective point count (long form)
  ZZ a;      // trace term: p + 1 - N on good fibers, 0 on bad ones
  bool bad = false;  // p | disc(t)
};

struct NagaoRecord {
  uint32_t p = 0;
  QQ A_E;        // exact rational average, denominator divides p
  ZZ minus_pA;   // -p * A_E(p) = -sum_t a_t(p)
  ZZ expected;   // e.g. 6p for the rank-6 family
  ZZ deviation;  // minus_pA - expected
};

FiberCount count_fiber(const SurfaceQT& s, uint32_t t, uint32_t p);

// expected_rank feeds the expected / deviation columns (pass 0 for none).
NagaoRecord nagao_sum(const SurfaceQT& s, uint32_t p, int expected_rank = 0);

enum class CertStatus { pass, fail, skipped };

struct CertificateRecord {
  uint32_t p = 0;
  CertStatus status = CertStatus::skipped;
  std::string skip_reason;
  ZZ line_x0;        // t-sum over the x = 0 column (must be 0)
  ZZ line_roots;     // total over the six roots of D_T (must be 6(p-1))
  ZZ line_nonroots;  // total over remaining columns (must be +6)
};

// Decomposes -pA_E(p) into the three ledger lines of the construction and
// asserts each with the closed-form quadratic sums.
CertificateRecord rank6_exact_certificate(const Rank6Params& params, uint32_t p);

// Primes where the discriminant-form 6p identity is not expected: divisors
// of A, c, the root squares, and their pairwise differences.
std::vector<ZZ> rank6_bad_primes_disc(const Rank6Params& params);

struct PartialSumResult {
  double value = 0;  // (1/X) sum_{p <= X} -A_E(p) log p
  std::vector<NagaoRecord> ledger;
};

// Odd primes only (the kernel has no characteristic-2 path).
PartialSumResult rosen_silverman_partial(const SurfaceQT& s, uint32_t X, int expected_rank = 0,
                                         unsigned jobs = 0);

// Per-prime parallel map over the odd primes <= pmax, results in prime order.
std::vector<NagaoRecord> nagao_scan(const SurfaceQT& s, uint32_t pmax, int expected_rank = 0,
                                    unsigned jobs = 0);

}  // namespace ellsurf
