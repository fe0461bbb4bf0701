#include "ellsurf/poly.hpp"

#include <algorithm>

namespace ellsurf {

PolyQ to_polyq(const PolyZ& p) {
  std::vector<QQ> c(p.coeffs().begin(), p.coeffs().end());
  return PolyQ(std::move(c));
}

PolyZ clear_denominators(const PolyQ& p, QQ* multiplier) {
  if (p.is_zero()) {
    if (multiplier) *multiplier = 1;
    return PolyZ();
  }
  ZZ l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q_den(c).get_mpz_t());
  std::vector<ZZ> ci;
  ci.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) ci.push_back(q_num(c) * (l / q_den(c)));
  ZZ g = 0;
  for (const auto& c : ci) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  for (auto& c : ci) c /= g;
  if (multiplier) *multiplier = make_q(l, g);
  return PolyZ(std::move(ci));
}

ZZ content(const PolyZ& p) {
  ZZ g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

PolyZ exact_div(const PolyZ& a, const ZZ& d) {
  if (d == 0) throw input_error("polynomial division by zero");
  std::vector<ZZ> c;
  c.reserve(a.coeffs().size());
  for (const auto& v : a.coeffs()) {
    if (v % d != 0) throw input_error("exact_div: coefficient not divisible");
    c.push_back(v / d);
  }
  return PolyZ(std::move(c));
}

PolyZ exact_div(const PolyZ& a, const PolyZ& b) {
  if (b.is_zero()) throw input_error("polynomial division by zero");
  auto [q, r] = divmod(to_polyq(a), to_polyq(b));
  if (!r.is_zero()) throw input_error("exact_div: remainder nonzero");
  std::vector<ZZ> c;
  c.reserve(q.coeffs().size());
  for (const auto& v : q.coeffs()) {
    if (q_den(v) != 1) throw input_error("exact_div: quotient not integral");
    c.push_back(q_num(v));
  }
  return PolyZ(std::move(c));
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw input_error("polynomial division by zero");
  PolyQ r = a, q;
  const int db = b.degree();
  const QQ lb = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    QQ f = r.leading() / lb;
    PolyQ t = PolyQ::monomial(f, r.degree() - db);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

PolyQ poly_gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return make_q(1, 1) / a.leading() * a;
}

std::optional<PolyQ> poly_sqrt(const PolyQ& p) {
  if (p.is_zero()) return PolyQ();
  if (p.degree() % 2 != 0) return std::nullopt;
  QQ lead_root;
  if (!is_square(p.leading(), &lead_root)) return std::nullopt;
  const int h = p.degree() / 2;
  // Solve top-down: coefficient of x^(2h-k) determines r[h-k].
  std::vector<QQ> r(h + 1, QQ(0));
  r[h] = lead_root;
  for (int k = 1; k <= h; ++k) {
    QQ s(0);
    for (int i = 1; i < k; ++i)
      if (h - i >= 0 && h - k + i <= h) s += r[h - i] * r[h - k + i];
    QQ target = p.coeff(2 * h - k) - s;
    r[h - k] = target / (2 * r[h]);
  }
  PolyQ root{std::vector<QQ>(r)};
  if (root * root != p) return std::nullopt;
  return root;
}

ZZ resultant(const PolyZ& a, const PolyZ& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree(), n = b.degree();
  if (m == 0) {
    ZZ r;
    mpz_pow_ui(r.get_mpz_t(), a.leading().get_mpz_t(), n);
    return r;
  }
  if (n == 0) {
    ZZ r;
    mpz_pow_ui(r.get_mpz_t(), b.leading().get_mpz_t(), m);
    return r;
  }
  const int size = m + n;
  // Sylvester matrix, rows: n shifts of a, m shifts of b.
  std::vector<std::vector<ZZ>> M(size, std::vector<ZZ>(size, ZZ(0)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) M[r][r + i] = a.coeff(m - i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) M[n + r][r + i] = b.coeff(n - i);
  // Bareiss fraction-free elimination.
  ZZ denom = 1;
  int sign = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (M[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < size; ++i)
        if (M[i][k] != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      std::swap(M[k], M[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / denom;
      }
      M[i][k] = 0;
    }
    denom = M[k][k];
  }
  return sign * M[size - 1][size - 1];
}

namespace {

// positive divisors of |n|
std::vector<ZZ> all_divisors(const ZZ& n) { return divisors(factorize(n)); }

}  // namespace

std::vector<std::pair<QQ, int>> rational_roots(const PolyQ& p) {
  std::vector<std::pair<QQ, int>> out;
  if (p.is_zero()) throw input_error("rational_roots of zero polynomial");
  PolyQ f = p;
  // Strip x^k.
  int k = 0;
  while (f.coeff(0) == 0 && !f.is_zero() && f.degree() >= 0) {
    std::vector<QQ> c(f.coeffs().begin() + 1, f.coeffs().end());
    f = PolyQ(std::move(c));
    ++k;
  }
  if (k > 0) out.push_back({QQ(0), k});
  if (f.degree() < 1) return out;
  PolyZ fz = clear_denominators(f);
  auto nums = all_divisors(fz.coeff(0));
  auto dens = all_divisors(fz.leading());
  for (const auto& dn : dens) {
    for (const auto& nm : nums) {
      ZZ g;
      mpz_gcd(g.get_mpz_t(), nm.get_mpz_t(), dn.get_mpz_t());
      if (g != 1) continue;
      for (int sign : {1, -1}) {
        QQ cand = make_q(sign * nm, dn);
        if (f.eval(cand) != 0) continue;
        int mult = 0;
        PolyQ root{-cand, QQ(1)};
        PolyQ g2 = f;
        while (true) {
          auto [q, r] = divmod(g2, root);
          if (!r.is_zero()) break;
          g2 = q;
          ++mult;
        }
        out.push_back({cand, mult});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<uint32_t> reduce_poly(const PolyZ& f, uint32_t p) {
  std::vector<uint32_t> c(f.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = reduce_mod(f.coeff(int(i)), p);
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

uint32_t eval_mod(const std::vector<uint32_t>& coeffs, uint32_t x, uint32_t p) {
  uint64_t acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = (acc * x + *it) % p;
  return static_cast<uint32_t>(acc);
}

std::vector<uint32_t> poly_roots_mod_p(const PolyZ& f, uint32_t p) {
  ModP check(0, p);  // validates the modulus
  (void)check;
  auto c = reduce_poly(f, p);
  if (c.empty()) throw input_error("poly_roots_mod_p: polynomial vanishes mod p");
  std::vector<uint32_t> roots;
  for (uint32_t x = 0; x < p; ++x)
    if (eval_mod(c, x, p) == 0) roots.push_back(x);
  return roots;
}

}  // namespace ellsurf
