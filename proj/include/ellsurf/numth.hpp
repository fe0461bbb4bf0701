// Exact integer / rational substrate: GMP-backed big integers and rationals,
// primality, factorization helpers, Legendre symbols and mod-p utilities.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellsurf {

using ZZ = mpz_class;
using QQ = mpq_class;

// Thrown for malformed input / violated preconditions (CLI exit code 2).
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a verification step fails (CLI exit code 1).
class verify_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical rational with den > 0, gcd(|num|, den) = 1.
QQ make_q(const ZZ& num, const ZZ& den);

inline ZZ q_num(const QQ& q) { return q.get_num(); }
inline ZZ q_den(const QQ& q) { return q.get_den(); }

inline bool fits_u32(const ZZ& n) { return n >= 0 && n.fits_ulong_p() && n.get_ui() <= 0xffffffffu; }

// Deterministic Miller-Rabin below 2^64 (fixed base set), GMP probable-prime
// test above.
bool is_prime(const ZZ& n);

std::vector<uint32_t> primes_up_to(uint32_t n);

// Trial division up to `bound`; removed factors land in `primes`, the
// remaining (possibly composite) part in `cofactor` (1 when fully split).
struct PartialFactorization {
  std::map<ZZ, int> primes;
  ZZ cofactor = 1;
};
PartialFactorization trial_factor(ZZ n, uint32_t bound);

// Full factorization via trial division + Brent-Pollard rho. Desk scale:
// throws input_error if a cofactor resists (not expected on this data set).
std::map<ZZ, int> factorize(const ZZ& n);

// All positive divisors from a factorization; throws input_error past `cap`.
std::vector<ZZ> divisors(const std::map<ZZ, int>& fac, size_t cap = 200000);

int v_adic(const ZZ& p, const ZZ& n);  // exact valuation v_p(n), n != 0

bool is_square(const ZZ& n, ZZ* root = nullptr);
bool is_square(const QQ& q, QQ* root = nullptr);

// Legendre symbol (a/p): +1 nonzero square, -1 non-square, 0 if p | a.
// p must be an odd prime.
int legendre_symbol(const ZZ& a, const ZZ& p);

// Validate an odd prime modulus (memoized per thread for kernel loops).
void check_odd_prime(const ZZ& p, const char* who);

// chi[x] = (x/p) for 0 <= x < p, built in one pass of squares.
std::vector<int8_t> quadratic_character_table(uint32_t p);

// Residue in [0, p) for an odd prime p < 2^31 (the sum-kernel range).
struct ModP {
  uint32_t residue = 0;
  uint32_t p = 3;

  ModP() = default;
  ModP(const ZZ& value, uint32_t modulus);

  ModP add(ModP other) const;
  ModP mul(ModP other) const;
  ModP pow(uint64_t e) const;
  ModP inv() const;
};

uint32_t reduce_mod(const ZZ& value, uint32_t p);

}  // namespace ellsurf
