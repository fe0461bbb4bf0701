#include "ellsurf/analytic.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <set>
#include <thread>

#include "ellsurf/legendre_sums.hpp"

namespace ellsurf {

namespace {

void check_kernel_prime(uint32_t p) {
  if (p == 2) throw input_error("unsupported characteristic 2");
  if (p > kKernelPrimeBound) throw input_error("prime exceeds the sum-kernel bound");
  if (!is_prime(ZZ(p))) throw input_error("kernel modulus must be prime");
}

// The three T-coefficient polynomials of a quadratic-in-T surface, reduced
// mod p: f(x,T) = u(x) T^2 + v(x) T + w(x).
struct DiscKernel {
  std::vector<uint32_t> u, v, w;
};

DiscKernel reduce_disc(const BiPoly& f, uint32_t p) {
  DiscKernel k;
  std::vector<ZZ> cu, cv, cw;
  for (int i = 0; i <= f.deg_x(); ++i) {
    cu.push_back(f.coeff(i, 2));
    cv.push_back(f.coeff(i, 1));
    cw.push_back(f.coeff(i, 0));
  }
  k.u = reduce_poly(PolyZ(std::move(cu)), p);
  k.v = reduce_poly(PolyZ(std::move(cv)), p);
  k.w = reduce_poly(PolyZ(std::move(cw)), p);
  return k;
}

// Long-form t-fiber as a square-completed cubic g(x) = 4 rhs + (a1 x + a3)^2.
std::vector<uint32_t> completed_cubic(const LongWeierstrassForm& w, uint32_t t, uint32_t p) {
  auto at = [&](const PolyZ& poly) { return eval_mod(reduce_poly(poly, p), t, p); };
  uint64_t a1 = at(w.a1), a2 = at(w.a2), a3 = at(w.a3), a4 = at(w.a4), a6 = at(w.a6);
  std::vector<uint32_t> g(4);
  g[3] = 4 % p;
  g[2] = uint32_t((4 * a2 + a1 * a1) % p);
  g[1] = uint32_t((4 * a4 + 2 * a1 * a3) % p);
  g[0] = uint32_t((4 * a6 + a3 * a3) % p);
  while (!g.empty() && g.back() == 0) g.pop_back();
  return g;
}

long direct_count_affine(const LongWeierstrassForm& w, uint32_t t, uint32_t p) {
  auto at = [&](const PolyZ& poly) { return eval_mod(reduce_poly(poly, p), t, p); };
  uint64_t a1 = at(w.a1), a2 = at(w.a2), a3 = at(w.a3), a4 = at(w.a4), a6 = at(w.a6);
  long n = 0;
  for (uint64_t x = 0; x < p; ++x) {
    uint64_t rhs = ((x + a2) % p * x % p + a4) % p * x % p;
    rhs = (rhs + a6) % p;
    for (uint64_t y = 0; y < p; ++y) {
      uint64_t lhs = (y * y + a1 * x % p * y + a3 * y) % p;
      if (lhs == rhs) ++n;
    }
  }
  return n;
}

}  // namespace

FiberCount count_fiber(const SurfaceQT& s, uint32_t t, uint32_t p) {
  check_kernel_prime(p);
  FiberCount fc;
  fc.p = p;
  fc.t = t;
  if (const auto* w = s.long_form()) {
    uint32_t dt = eval_mod(reduce_poly(w->disc_T(), p), t, p);
    if (dt == 0) {
      fc.bad = true;
      fc.a = 0;
      fc.N = p + 1;  // by the a_t = 0 convention
      return fc;
    }
    if (p == 3) {
      fc.N = direct_count_affine(*w, t, p) + 1;
    } else {
      auto chi = quadratic_character_table(p);
      auto g = completed_cubic(*w, t, p);
      long sum = 0;
      for (uint32_t x = 0; x < p; ++x) sum += chi[eval_mod(g, x, p)];
      fc.N = ZZ(p) + 1 + sum;
    }
    fc.a = ZZ(p) + 1 - fc.N;
    return fc;
  }
  if (const auto* d = s.disc_form()) {
    // a_t(p) = -sum_x chi(f(x,t)); no bad-fiber convention on this form.
    auto chi = quadratic_character_table(p);
    auto k = reduce_disc(d->f, p);
    uint64_t t2 = uint64_t(t) * t % p;
    long sum = 0;
    // f(x,t) = u(x) t^2 + v(x) t + w(x), Horner in x per term
    for (uint32_t x = 0; x < p; ++x) {
      uint64_t val = (uint64_t(eval_mod(k.u, x, p)) * t2 + uint64_t(eval_mod(k.v, x, p)) * t +
                      eval_mod(k.w, x, p)) %
                     p;
      sum += chi[val];
    }
    fc.a = -sum;
    fc.N = ZZ(p) + 1 - fc.a;
    return fc;
  }
  throw input_error("count_fiber: biquadratic surfaces are outside the quadratic-in-T kernel");
}

NagaoRecord nagao_sum(const SurfaceQT& s, uint32_t p, int expected_rank) {
  check_kernel_prime(p);
  NagaoRecord rec;
  rec.p = p;
  ZZ total = 0;  // sum_t a_t(p)
  if (const auto* d = s.disc_form()) {
    auto chi = quadratic_character_table(p);
    auto k = reduce_disc(d->f, p);
    long dbl_sum = 0;  // sum_x sum_t chi(f(x,t))
    for (uint32_t x = 0; x < p; ++x) {
      uint64_t u = eval_mod(k.u, x, p), v = eval_mod(k.v, x, p), w = eval_mod(k.w, x, p);
      long inner = 0;
      for (uint64_t t = 0; t < p; ++t) {
        uint64_t val = ((u * t + v) % p * t + w) % p;
        inner += chi[val];
      }
      dbl_sum += inner;
    }
    total = -dbl_sum;
  } else if (s.long_form() != nullptr) {
    const auto* w = s.long_form();
    auto chi = quadratic_character_table(p);
    auto disc_p = reduce_poly(w->disc_T(), p);
    std::vector<std::vector<uint32_t>> polys{reduce_poly(w->a1, p), reduce_poly(w->a2, p),
                                             reduce_poly(w->a3, p), reduce_poly(w->a4, p),
                                             reduce_poly(w->a6, p)};
    for (uint32_t t = 0; t < p; ++t) {
      if (!disc_p.empty() && eval_mod(disc_p, t, p) == 0) continue;  // a_t = 0
      uint64_t a1 = eval_mod(polys[0], t, p), a2 = eval_mod(polys[1], t, p),
               a3 = eval_mod(polys[2], t, p), a4 = eval_mod(polys[3], t, p),
               a6 = eval_mod(polys[4], t, p);
      // completed square: g(x) = 4(x^3 + a2 x^2 + a4 x + a6) + (a1 x + a3)^2
      uint64_t g3 = 4 % p, g2 = (4 * a2 + a1 * a1) % p, g1 = (4 * a4 + 2 * a1 * a3) % p,
               g0 = (4 * a6 + a3 * a3) % p;
      long sum = 0;
      if (p == 3) {
        FiberCount fc = count_fiber(s, t, p);
        total += fc.a;
        continue;
      }
      for (uint64_t x = 0; x < p; ++x) {
        uint64_t val = (((g3 * x + g2) % p * x + g1) % p * x + g0) % p;
        sum += chi[val];
      }
      total += -sum;  // a_t = -sum_x chi(g(x))
    }
  } else {
    throw input_error("nagao_sum: biquadratic surfaces are outside the quadratic-in-T kernel");
  }
  rec.minus_pA = -total;
  rec.A_E = make_q(total, p);
  rec.expected = ZZ(expected_rank) * p;
  rec.deviation = rec.minus_pA - rec.expected;
  return rec;
}

std::vector<ZZ> rank6_bad_primes_disc(const Rank6Params& params) {
  ZZ prod = params.A * params.c;
  std::array<ZZ, 6> r;
  for (int i = 0; i < 6; ++i) {
    r[i] = params.roots[i] * params.roots[i];
    prod *= r[i];
  }
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) prod *= r[i] - r[j];
  std::vector<ZZ> out;
  for (const auto& [p, e] : factorize(prod)) out.push_back(p);
  return out;
}

CertificateRecord rank6_exact_certificate(const Rank6Params& params, uint32_t p) {
  check_kernel_prime(p);
  CertificateRecord rec;
  rec.p = p;
  if (params.A % p == 0) {
    rec.skip_reason = "p divides A (leading coefficient of D_T vanishes)";
    return rec;
  }
  if (params.c % p == 0) {
    rec.skip_reason = "p divides c (x = 0 column does not vanish)";
    return rec;
  }
  std::set<uint32_t> roots;
  for (const ZZ& rho : params.roots) {
    uint32_t r = reduce_mod(rho * rho, p);
    if (r == 0) {
      rec.skip_reason = "a root square vanishes mod p";
      return rec;
    }
    roots.insert(r);
  }
  if (roots.size() != 6) {
    rec.skip_reason = "root squares collide mod p";
    return rec;
  }

  auto chi = quadratic_character_table(p);
  auto gv = reduce_poly(params.g, p);
  auto hv = reduce_poly(params.h, p);
  auto dv = reduce_poly(params.d_T, p);

  // x = 0 column: sum_t chi(2 c t - D), a full linear character sum.
  auto x0 = complete_quadratic_sum(0, 2 * params.c, -params.D, p);
  rec.line_x0 = x0.value;
  bool ok = x0.branch == QuadSumBranch::degenerate_linear && x0.value == 0;

  ZZ roots_total = 0, nonroots_total = 0;
  int roots_seen = 0;
  for (uint32_t x = 1; x < p; ++x) {
    uint64_t x3 = uint64_t(x) * x % p * x % p;
    ZZ a(x3);
    ZZ b(2 * uint64_t(eval_mod(gv, x, p)) % p);
    ZZ c(p - eval_mod(hv, x, p));  // -h(x) mod p
    auto qs = quadratic_sum(a, b, c, p);
    bool is_root = eval_mod(dv, x, p) == 0;
    if (is_root) {
      ++roots_seen;
      roots_total += qs.value;
      // contribution must be (p-1) * chi(x^3) with chi(x^3) = +1 at x = rho^2
      ok = ok && qs.branch == QuadSumBranch::discriminant_divisible && qs.value == p - 1;
      ok = ok && roots.count(x) == 1;
    } else {
      nonroots_total += qs.value;
      ok = ok && qs.branch == QuadSumBranch::generic;
    }
  }
  rec.line_roots = roots_total;
  rec.line_nonroots = nonroots_total;
  ok = ok && roots_seen == 6 && roots_total == ZZ(6) * (p - 1) && nonroots_total == 6;
  ok = ok && rec.line_x0 + roots_total + nonroots_total == ZZ(6) * p;
  rec.status = ok ? CertStatus::pass : CertStatus::fail;
  return rec;
}

std::vector<NagaoRecord> nagao_scan(const SurfaceQT& s, uint32_t pmax, int expected_rank,
                                    unsigned jobs) {
  if (pmax > kKernelPrimeBound) throw input_error("pmax exceeds the sum-kernel bound");
  auto primes = primes_up_to(pmax);
  std::vector<uint32_t> odd;
  for (uint32_t p : primes)
    if (p > 2) odd.push_back(p);
  std::vector<NagaoRecord> out(odd.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, odd.size() == 0 ? 1 : unsigned(odd.size()));
  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= odd.size()) return;
      try {
        out[i] = nagao_sum(s, odd[i], expected_rank);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

PartialSumResult rosen_silverman_partial(const SurfaceQT& s, uint32_t X, int expected_rank,
                                         unsigned jobs) {
  PartialSumResult res;
  res.ledger = nagao_scan(s, X, expected_rank, jobs);
  double acc = 0;
  for (const auto& rec : res.ledger) {
    // -A_E(p) = minus_pA / p exactly; log p in double precision
    acc += rec.minus_pA.get_d() / double(rec.p) * std::log(double(rec.p));
  }
  res.value = X == 0 ? 0 : acc / double(X);
  return res;
}

}  // namespace ellsurf
