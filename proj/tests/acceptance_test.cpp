// Acceptance suite: one pass/fail line per criterion, exact tolerances
// pinned in code.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "ellsurf/json_io.hpp"
#include "ellsurf/legendre_sums.hpp"
#include "ellsurf/pipeline.hpp"

using namespace ellsurf;

namespace {

void report(int n, const char* what, bool ok) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", n, what);
  std::fflush(stdout);
  CHECK_MESSAGE(ok, "criterion ", n, ": ", what);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct PipelineCache {
  HeightsRun thm23, rank7, rank8;
  bool ready = false;
};

PipelineCache& runs() {
  static PipelineCache cache;
  if (!cache.ready) {
    cache.thm23 = catalog_heights("thm2.3", QQ(0), 128);
    cache.rank7 = catalog_heights("rank7", QQ(20), 128);
    cache.rank8 = catalog_heights("rank8", QQ(1), 128);
    cache.ready = true;
  }
  return cache;
}

}  // namespace

TEST_CASE("criterion 1: lemma suite, closed forms vs brute force") {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  // Lemma on factorizable sums: all pairs, odd p < 200
  for (uint32_t p : primes_up_to(199)) {
    if (p == 2) continue;
    auto chi = quadratic_character_table(p);
    for (uint32_t n1 = 0; n1 < p && ok; ++n1) {
      for (uint32_t n2 = 0; n2 < p; ++n2) {
        long brute = 0;
        for (uint32_t x = 0; x < p; ++x) brute += chi[(n1 + x) % p] * chi[(n2 + x) % p];
        if (factorizable_sum(n1, n2, p) != brute) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) break;
  }
  // Quadratic Legendre sums: all (a,b,c) with (a,b) != (0,0), odd p < 100
  for (uint32_t p : primes_up_to(99)) {
    if (p == 2 || !ok) continue;
    auto chi = quadratic_character_table(p);
    for (uint32_t a = 0; a < p && ok; ++a) {
      for (uint32_t b = 0; b < p && ok; ++b) {
        if (a == 0 && b == 0) continue;
        for (uint32_t c = 0; c < p; ++c) {
          long brute = 0;
          for (uint64_t t = 0; t < p; ++t) brute += chi[((a * t + b) % p * t + c) % p];
          if (quadratic_sum(a, b, c, p).value != brute) {
            ok = false;
            break;
          }
        }
      }
    }
  }
  double dt = seconds_since(t0);
  ok = ok && dt < 60.0;
  std::printf("  (lemma suite exhaustive verification took %.1f s)\n", dt);
  report(1, "factorizable and quadratic Legendre sums match brute force exhaustively", ok);
}

TEST_CASE("criterion 2: rank-6 coefficient and admissibility reproduction") {
  auto t0 = std::chrono::steady_clock::now();
  auto p = solve_rank6({1, 2, 3, 4, 5, 6});
  bool ok = p.A == ZZ("8916100448256000000") && p.c == ZZ("2149908480000") &&
            p.b == ZZ("-1603174809600") && p.a == ZZ("16660111104") &&
            p.B == ZZ("-811365140824616222208") && p.C == ZZ("26497490347321493520384") &&
            p.D == ZZ("-343107594345448813363200");
  auto adm = admissibility_check(p);
  ok = ok && adm.d_t1 == ZZ("4291243480243836561123092143580209905401856");
  ok = ok && adm.d_t2_display == ZZ("4291243816662452751895093255391719515488256");
  // divisibility by the listed prime powers, checked by exact division
  ZZ p2_32 = ZZ(1) << 32, p2_33 = ZZ(1) << 33, p3_25, p3_12;
  mpz_ui_pow_ui(p3_25.get_mpz_t(), 3, 25);
  mpz_ui_pow_ui(p3_12.get_mpz_t(), 3, 12);
  ok = ok && adm.d_t1 % p2_32 == 0 && adm.d_t1 % p3_25 == 0;
  for (long q : {7 * 7 * 7 * 7 * 7L, 11 * 11L, 13L, 19L, 29L, 31L, 47L, 67L, 83L, 97L, 103L})
    ok = ok && adm.d_t1 % q == 0;
  ok = ok && adm.d_t2_display % p2_33 == 0 && adm.d_t2_display % p3_12 == 0;
  for (const char* q : {"7", "11", "13", "41", "173", "17389", "805873", "9447850813"})
    ok = ok && adm.d_t2_display % ZZ(q) == 0;
  double dt = seconds_since(t0);
  ok = ok && dt < 1.0;
  report(2, "construction constants and both 43-digit admissibility integers exact", ok);
}

TEST_CASE("criterion 3: exact Nagao certificate on 5 <= p <= 2003") {
  auto params = solve_rank6({1, 2, 3, 4, 5, 6});
  SurfaceQT disc = rank6_surface(params);
  auto weier = rank6_to_weierstrass(params);
  auto adm = admissibility_check(params);
  auto disc_bad = rank6_bad_primes_disc(params);
  auto in = [](const std::vector<ZZ>& v, uint32_t p) {
    for (const auto& q : v)
      if (q == p) return true;
    return false;
  };

  auto ledger_disc = nagao_scan(disc, 2003, 6, 0);
  int total = 0, pass = 0;
  bool all_good_exact = true;
  for (const auto& rec : ledger_disc) {
    if (rec.p < 5) continue;
    ++total;
    if (rec.minus_pA == ZZ(6) * rec.p) {
      ++pass;
    } else if (!in(disc_bad, rec.p)) {
      all_good_exact = false;  // a failure outside the enumerated bad set
    }
  }
  double rate = total ? double(pass) / total : 0;
  std::printf("  (discriminant form: %d/%d primes give exactly 6p; bad set", pass, total);
  for (const auto& q : disc_bad) std::printf(" %s", q.get_str().c_str());
  std::printf(")\n");

  // the per-prime closed-form ledger must agree: pass everywhere off its skip set
  int cert_pass = 0, cert_total = 0;
  bool cert_clean = true;
  for (uint32_t p : primes_up_to(2003)) {
    if (p < 5) continue;
    ++cert_total;
    auto cert = rank6_exact_certificate(params, p);
    if (cert.status == CertStatus::pass) ++cert_pass;
    if (cert.status == CertStatus::fail) cert_clean = false;
  }
  double cert_rate = cert_total ? double(cert_pass) / cert_total : 0;
  std::printf("  (certificate ledger: %d/%d primes pass, rest skipped with reasons)\n", cert_pass,
              cert_total);

  auto ledger_w = nagao_scan(weier.surface, 2003, 6, 0);
  ZZ max_dev = 0;
  for (const auto& rec : ledger_w) {
    if (rec.p < 5 || in(adm.bad_primes, rec.p)) continue;
    if (abs(rec.deviation) > max_dev) max_dev = abs(rec.deviation);
  }
  std::printf("  (weierstrass form: max |{-pA} - 6p| = %s outside the bad set)\n",
              max_dev.get_str().c_str());
  bool ok = all_good_exact && rate >= 0.99 && max_dev <= 12;
  ok = ok && cert_clean && cert_rate >= 0.99;
  report(3, "-pA_E(p) = 6p exactly off the bad set (rate >= 99%), weierstrass deviation <= 12", ok);
}

TEST_CASE("criterion 4: Rosen-Silverman partial sum at X = 2000") {
  auto params = solve_rank6({1, 2, 3, 4, 5, 6});
  auto weier = rank6_to_weierstrass(params);
  auto res = rosen_silverman_partial(weier.surface, 2000, 6, 0);
  std::printf("  (partial sum value %.4f)\n", res.value);
  bool ok = res.value >= 5.5 && res.value <= 6.5;
  report(4, "rank-6 Weierstrass partial sum lies in [5.5, 6.5]", ok);
}

TEST_CASE("criterion 5: catalog on-curve identities, zero tolerance") {
  bool ok = true;
  size_t counts[4] = {6, 7, 8, 10};
  const char* names[4] = {"thm2.3", "rank7", "rank8", "dep10"};
  for (int i = 0; i < 4; ++i) {
    const auto& e = catalog_entry(names[i]);
    ok = ok && e.points.size() == counts[i];
    for (const auto& pt : e.points) ok = ok && on_surface(e.surface, pt);
  }
  report(5, "all 31 catalog points satisfy their curve equations identically in T", ok);
}

TEST_CASE("criterion 6: minimal model of the rank-8 fiber at T = 1") {
  const auto& run = runs().rank8;
  ZZ alpha("357917711928106838175050781865");
  ZZ beta("8790806811671574287759992288018136706011725");
  const WeierstrassQ& E = run.minimal;
  bool ok = E.a1 == 0 && E.a2 == -1 && E.a3 == 0 && E.a4 == QQ(ZZ(-alpha)) && E.a6 == QQ(beta);
  report(6, "E_1 minimal model y^2 = x^3 - x^2 - alpha x + beta with exact alpha, beta", ok);
}

TEST_CASE("criterion 7: height determinants and independence verdicts") {
  struct Row {
    const char* name;
    const HeightsRun* run;
    double target;
    int expect_rank;
  };
  auto& cache = runs();
  Row rows[3] = {{"thm2.3", &cache.thm23, 880000.0, 6},
                 {"rank7 @ T=20", &cache.rank7, 37472.0, 7},
                 {"rank8 on E_1", &cache.rank8, 124079248627.08, 8}};
  bool ok = true;
  for (const auto& row : rows) {
    const HeightGram& g = row.run->gram_result;
    auto match = match_determinant(g.det, row.target, int(g.points.size()));
    std::printf(
        "  (%s: count=%d det=%.6g matched=%.6g target=%.6g scaling=2^(%d*%zu)*(1+%d)^2 "
        "rel_err=%.2e)\n",
        row.name, g.numerical_rank, g.det, match.scaled_det, row.target, match.scaling,
        g.points.size(), match.translation_class, match.rel_error);
    ok = ok && g.numerical_rank == row.expect_rank && g.conclusive;
    ok = ok && match.rel_error < 0.01;
  }
  report(7, "dets match 880000 / 37472 / 124079248627.08 within 1% (scaling reported); counts 6/7/8",
         ok);
}

TEST_CASE("criterion 8: dependence detection in the ten-point set") {
  auto run = catalog_heights("dep10", QQ(3), 128);
  std::printf("  (dep10 at t0=3: independent count = %d, conclusive = %d)\n",
              run.gram_result.numerical_rank, int(run.gram_result.conclusive));
  bool ok = run.gram_result.numerical_rank == 5 && run.gram_result.conclusive;
  report(8, "ten-point set at good t0 yields independent-count exactly 5", ok);
}

TEST_CASE("criterion 9: height quadratic form and parallelogram law") {
  auto& cache = runs();
  std::mt19937 rng(2718);
  struct Sample {
    const WeierstrassQ* E;
    CurvePoint P;
  };
  std::vector<Sample> samples;
  for (const HeightsRun* run : {&cache.thm23, &cache.rank7, &cache.rank8}) {
    for (const auto& P : run->points) {
      if (P.infinity) continue;
      samples.push_back({&run->minimal, P});
    }
  }
  // 20 points drawn across the three verified curves
  std::shuffle(samples.begin(), samples.end(), rng);
  samples.resize(20);
  bool ok = true;
  for (const auto& s : samples) {
    auto hP = canonical_height(*s.E, s.P, 128);
    if (hP.torsion) continue;
    double base = hP.value.to_double();
    int m = 2 + int(rng() % 4);  // m in [2,5]
    double hm = canonical_height(*s.E, mul(*s.E, m, s.P), 128).value.to_double();
    ok = ok && std::fabs(hm - m * m * base) <= 1e-8 * std::fabs(hm);
    // parallelogram against another sample on the same curve
    const Sample& other = samples[rng() % samples.size()];
    if (other.E != s.E || other.P == s.P || other.P == neg(*s.E, s.P)) continue;
    double lhs = canonical_height(*s.E, add(*s.E, s.P, other.P), 128).value.to_double() +
                 canonical_height(*s.E, add(*s.E, s.P, neg(*s.E, other.P)), 128).value.to_double();
    double rhs = 2 * base + 2 * canonical_height(*s.E, other.P, 128).value.to_double();
    ok = ok && std::fabs(lhs - rhs) <= 1e-8 * std::fabs(rhs);
  }
  report(9, "h(mP) = m^2 h(P) and the parallelogram law within 1e-8 relative on 20 points", ok);
}

TEST_CASE("criterion 10: higher-degree D1/D2 formulas and square certification") {
  bool ok = true;
  std::mt19937 rng(31415);
  auto small = [&]() -> QQ { return QQ(int(rng() % 11) - 5); };
  // B = D = 0 reduction, identically in x
  for (int iter = 0; iter < 20; ++iter) {
    PolyQ A{small(), small(), small()}, E{small(), small(), small()};
    PolyQ C{small(), small(), small(), small(), small()};
    if (A.is_zero()) continue;
    auto rep = higher_degree_d1_d2(A, PolyQ(), C, PolyQ(), E);
    PolyQ A2 = A * A, A4 = A2 * A2;
    ok = ok && rep.d1.is_zero() && rep.d2 == QQ(16) * (A4 * (QQ(4) * (A2 * E * E) - C * C));
  }
  // 50 reverse-engineered perfect squares certified by exact square root
  int done = 0;
  while (done < 50 && ok) {
    PolyQ A{small(), small(), small()};
    PolyQ u{small(), small(), small(), small()};
    PolyQ v{small(), small(), small()};
    if (A.is_zero()) continue;
    PolyQ B = QQ(2) * (A * u), C = u * u + QQ(2) * (A * v), D = QQ(2) * (u * v);
    if (B.degree() > 4 || C.degree() > 4 || D.degree() > 4) continue;
    auto rep = higher_degree_d1_d2(A, B, C, D, v);
    ok = ok && rep.d1.is_zero() && rep.d2.is_zero() && rep.degree_bounds_ok;
    QQ x0(int(rng() % 9) - 4);
    if (A.eval(x0) == 0) continue;
    PolyQ root = certify_square_fiber(A, B, C, D, v, x0);
    PolyQ f{v.eval(x0) * v.eval(x0), D.eval(x0), C.eval(x0), B.eval(x0), A.eval(x0) * A.eval(x0)};
    ok = ok && root * root == f;
    ++done;
  }
  ok = ok && done == 50;
  report(10, "D1/D2 reduce to the usual discriminant at B = D = 0; 50 square fibers certified", ok);
}
