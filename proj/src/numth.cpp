#include "ellsurf/numth.hpp"

#include <algorithm>
#include <numeric>

namespace ellsurf {

QQ make_q(const ZZ& num, const ZZ& den) {
  if (den == 0) throw input_error("rational with zero denominator");
  QQ q(num, den);
  q.canonicalize();
  return q;
}

namespace {

// Strong probable-prime test to base a for odd n = d * 2^s + 1.
bool miller_rabin(const ZZ& n, const ZZ& d, unsigned long s, unsigned long a) {
  ZZ x;
  ZZ base(a);
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(const ZZ& n) {
  if (n < 2) return false;
  static const unsigned long small[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                        23, 29, 31, 37, 41, 43, 47};
  for (unsigned long p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  ZZ d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    // First twelve primes: deterministic for n < 3.18e23 > 2^64.
    for (unsigned long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
      if (!miller_rabin(n, d, s, a)) return false;
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

std::vector<uint32_t> primes_up_to(uint32_t n) {
  std::vector<uint32_t> out;
  if (n < 2) return out;
  std::vector<bool> sieve(size_t(n) + 1, true);
  sieve[0] = sieve[1] = false;
  for (uint64_t i = 2; i * i <= n; ++i)
    if (sieve[i])
      for (uint64_t j = i * i; j <= n; j += i) sieve[j] = false;
  for (uint32_t i = 2; i <= n; ++i)
    if (sieve[i]) out.push_back(i);
  return out;
}

PartialFactorization trial_factor(ZZ n, uint32_t bound) {
  PartialFactorization pf;
  if (n < 0) n = -n;
  if (n == 0) throw input_error("cannot factor 0");
  for (uint32_t p : {2u, 3u, 5u}) {
    while (n % p == 0) {
      n /= p;
      pf.primes[p] += 1;
    }
  }
  // Wheel over numbers coprime to 30.
  static const uint32_t wheel[] = {4, 2, 4, 2, 4, 6, 2, 6};
  uint64_t d = 7;
  size_t wi = 0;
  while (d <= bound && ZZ(d) * d <= n) {
    while (n % d == 0) {
      n /= static_cast<unsigned long>(d);
      pf.primes[ZZ(static_cast<unsigned long>(d))] += 1;
    }
    d += wheel[wi];
    wi = (wi + 1) % 8;
  }
  if (n > 1 && ZZ(d) * d > n) {
    pf.primes[n] += 1;  // remaining part is prime
    n = 1;
  }
  pf.cofactor = n;
  return pf;
}

namespace {

ZZ rho_brent(const ZZ& n) {
  // Brent's cycle-finding variant of Pollard rho.
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eedULL);
  for (int attempt = 0; attempt < 64; ++attempt) {
    ZZ y = rng.get_z_range(n - 3) + 2;
    ZZ c = rng.get_z_range(n - 2) + 1;
    ZZ m = 128, g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
      x = y;
      for (ZZ i = 0; i < r; ++i) y = (y * y + c) % n;
      ZZ k = 0;
      while (k < r && g == 1) {
        ys = y;
        ZZ rk = r - k;
        ZZ lim = m < rk ? m : rk;
        for (ZZ i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        ZZ diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g != n) return g;
  }
  throw input_error("factorization failed (rho exhausted) on " + ZZ(n).get_str());
}

void factor_rec(const ZZ& n, std::map<ZZ, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  ZZ d = rho_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::map<ZZ, int> factorize(const ZZ& n) {
  PartialFactorization pf = trial_factor(n, 1u << 20);
  if (pf.cofactor > 1) factor_rec(pf.cofactor, pf.primes);
  return pf.primes;
}

std::vector<ZZ> divisors(const std::map<ZZ, int>& fac, size_t cap) {
  std::vector<ZZ> out{1};
  for (const auto& [p, e] : fac) {
    size_t base = out.size();
    if (base * (e + 1) > cap) throw input_error("divisor enumeration exceeds cap");
    ZZ pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int v_adic(const ZZ& p, const ZZ& n) {
  if (n == 0) throw input_error("valuation of zero");
  ZZ m = abs(n);
  int v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

bool is_square(const ZZ& n, ZZ* root) {
  if (n < 0) return false;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (root) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
  return true;
}

bool is_square(const QQ& q, QQ* root) {
  ZZ rn, rd;
  if (!is_square(q_num(q), &rn) || !is_square(q_den(q), &rd)) return false;
  if (root) *root = make_q(rn, rd);
  return true;
}

namespace {

// odd-prime validation with a per-thread memo of the last good modulus (the
// sum kernels call this in tight loops with a fixed p)
void require_odd_prime(const ZZ& p, const char* who) {
  thread_local ZZ last_good = 0;
  if (p == last_good) return;
  if (p < 3 || p % 2 == 0)
    throw input_error(std::string(who) + ": modulus must be an odd prime, got " + p.get_str());
  if (!is_prime(p)) throw input_error(std::string(who) + ": modulus not prime: " + p.get_str());
  last_good = p;
}

}  // namespace

int legendre_symbol(const ZZ& a, const ZZ& p) {
  require_odd_prime(p, "legendre_symbol");
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

void check_odd_prime(const ZZ& p, const char* who) { require_odd_prime(p, who); }

std::vector<int8_t> quadratic_character_table(uint32_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(ZZ(p))) throw input_error("character table needs an odd prime");
  std::vector<int8_t> chi(p, -1);
  chi[0] = 0;
  for (uint64_t r = 1; r < p; ++r) chi[(r * r) % p] = 1;
  return chi;
}

uint32_t reduce_mod(const ZZ& value, uint32_t p) {
  ZZ r = value % p;
  if (r < 0) r += p;
  return static_cast<uint32_t>(r.get_ui());
}

ModP::ModP(const ZZ& value, uint32_t modulus) : residue(0), p(modulus) {
  if (p < 3 || p % 2 == 0 || !is_prime(ZZ(p))) throw input_error("ModP: modulus must be an odd prime");
  residue = reduce_mod(value, p);
}

ModP ModP::add(ModP other) const {
  ModP r = *this;
  r.residue = (uint64_t(residue) + other.residue) % p;
  return r;
}

ModP ModP::mul(ModP other) const {
  ModP r = *this;
  r.residue = uint32_t((uint64_t(residue) * other.residue) % p);
  return r;
}

ModP ModP::pow(uint64_t e) const {
  ModP r = *this;
  uint64_t acc = 1, base = residue;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  r.residue = uint32_t(acc);
  return r;
}

ModP ModP::inv() const {
  if (residue == 0) throw input_error("ModP: inverse of zero");
  return pow(p - 2);
}

}  // namespace ellsurf
