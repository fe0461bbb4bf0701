#include "ellsurf/heights.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "ellsurf/poly.hpp"

namespace ellsurf {

namespace {

// Integral model of E with the connecting map (u = 1/d scaling).
std::pair<WeierstrassQ, CurveMap> integral_model(const WeierstrassQ& E) {
  ZZ den = 1;
  for (const QQ* a : {&E.a1, &E.a2, &E.a3, &E.a4, &E.a6})
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q_den(*a).get_mpz_t());
  CurveMap m;
  m.u = make_q(1, den);
  return {m.apply(E), m};
}

struct DupPair {
  ZZ b2, b4, b6, b8;
  ZZ res;  // resultant of the two dehomogenized quartics; nonzero

  ZZ num(const ZZ& N, const ZZ& D) const {
    ZZ D2 = D * D;
    return N * N * N * N - b4 * N * N * D2 - 2 * b6 * N * D * D2 - b8 * D2 * D2;
  }
  ZZ den(const ZZ& N, const ZZ& D) const {
    ZZ D2 = D * D;
    return 4 * N * N * N * D + b2 * N * N * D2 + 2 * b4 * N * D * D2 + b6 * D2 * D2;
  }
};

DupPair make_dup(const WeierstrassQ& E) {
  DupPair d;
  d.b2 = q_num(E.b2);
  d.b4 = q_num(E.b4);
  d.b6 = q_num(E.b6);
  d.b8 = q_num(E.b8);
  PolyZ qn{-d.b8, -2 * d.b6, -d.b4, 0, 1};
  PolyZ qd{d.b6, 2 * d.b4, d.b2, 4};
  d.res = resultant(qn, qd);
  if (d.res == 0) throw std::logic_error("duplication resultant vanished on a nonsingular curve");
  d.res = abs(d.res);
  return d;
}

// Archimedean part: log max(|x0|, 1) plus the renormalized orbit of the
// homogeneous duplication pair over R.
Real archimedean_part(const DupPair& dup, const QQ& x0, mpfr_prec_t prec) {
  const mpfr_prec_t wp = prec + 64;
  Real N = Real::of(x0, wp), D = Real::of(QQ(1), wp);
  Real b2 = Real::of(dup.b2, wp), b4 = Real::of(dup.b4, wp), b6 = Real::of(dup.b6, wp),
       b8 = Real::of(dup.b8, wp);
  Real two = Real::of(ZZ(2), wp), four = Real::of(ZZ(4), wp);
  Real m0 = max(abs(N), abs(D));
  Real acc = log(m0);
  N /= m0;
  D /= m0;
  const unsigned long steps = static_cast<unsigned long>(prec) / 2 + 32;
  for (unsigned long k = 0; k < steps; ++k) {
    Real N2 = N * N, D2 = D * D, ND = N * D;
    Real qn = N2 * N2 - b4 * N2 * D2 - two * b6 * ND * D2 - b8 * D2 * D2;
    Real qd = four * N2 * ND + b2 * N2 * D2 + two * b4 * ND * D2 + b6 * D2 * D2;
    Real m = max(abs(qn), abs(qd));
    if (m.is_zero()) throw input_error("height iteration degenerated (torsion point?)");
    Real term = log(m);
    term.shift_down(2 * (k + 1));  // 4^-(k+1)
    acc += term;
    N = qn / m;
    D = qd / m;
  }
  return acc;
}

// Finite part: sum 4^-(k+1) log gcd_k over the reduced duplication orbit,
// computed modulo res^(steps+2); every step gcd divides res.
Real finite_part(const DupPair& dup, const QQ& x0, mpfr_prec_t prec) {
  const unsigned long steps = static_cast<unsigned long>(prec) / 2 + 16;
  ZZ modulus;
  mpz_pow_ui(modulus.get_mpz_t(), dup.res.get_mpz_t(), steps + 2);
  ZZ A = q_num(x0) % modulus, B = q_den(x0) % modulus;
  if (A < 0) A += modulus;
  const mpfr_prec_t wp = prec + 64;
  Real acc(wp);
  for (unsigned long k = 0; k < steps; ++k) {
    ZZ N = dup.num(A, B) % modulus;
    ZZ D = dup.den(A, B) % modulus;
    if (N < 0) N += modulus;
    if (D < 0) D += modulus;
    ZZ g;
    mpz_gcd(g.get_mpz_t(), N.get_mpz_t(), dup.res.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), D.get_mpz_t());
    if (g > 1) {
      Real term = log(Real::of(g, wp));
      term.shift_down(2 * (k + 1));
      acc += term;
      modulus /= g;
      N /= g;
      D /= g;
    }
    A = N % modulus;
    B = D % modulus;
  }
  return acc;
}

// good reduction prime for the torsion cross-check: odd, below the kernel
// scale, not dividing the discriminant
uint32_t next_good_prime(const WeierstrassQ& E, uint32_t from) {
  ZZ disc = q_num(E.disc);
  for (uint32_t p = from;; ++p) {
    if (!is_prime(ZZ(p)) || p < 5) continue;
    if (disc % p != 0) return p;
    if (p > 100000) throw input_error("no small good prime found for torsion cross-check");
  }
}

long count_points_mod_p(const WeierstrassQ& E, uint32_t p) {
  auto chi = quadratic_character_table(p);
  uint64_t a1 = reduce_mod(q_num(E.a1), p), a2 = reduce_mod(q_num(E.a2), p),
           a3 = reduce_mod(q_num(E.a3), p), a4 = reduce_mod(q_num(E.a4), p),
           a6 = reduce_mod(q_num(E.a6), p);
  // completed square g(x) = 4 rhs + (a1 x + a3)^2
  uint64_t g3 = 4 % p, g2 = (4 * a2 + a1 * a1) % p, g1 = (4 * a4 + 2 * a1 * a3) % p,
           g0 = (4 * a6 + a3 * a3) % p;
  long n = long(p) + 1;
  for (uint64_t x = 0; x < p; ++x) {
    uint64_t val = (((g3 * x + g2) % p * x + g1) % p * x + g0) % p;
    n += chi[val];
  }
  return n;
}

}  // namespace

PolyZ duplication_numerator(const WeierstrassQ& E) {
  auto [Ei, m] = integral_model(E);
  DupPair d = make_dup(Ei);
  return PolyZ{-d.b8, -2 * d.b6, -d.b4, 0, 1};
}

PolyZ duplication_denominator(const WeierstrassQ& E) {
  auto [Ei, m] = integral_model(E);
  DupPair d = make_dup(Ei);
  return PolyZ{d.b6, 2 * d.b4, d.b2, 4};
}

TorsionResult torsion_check(const WeierstrassQ& E, const CurvePoint& P) {
  if (!on_curve(E, P)) throw input_error("torsion_check: point not on curve");
  TorsionResult res;
  CurvePoint acc = P;
  for (int n = 1; n <= 12; ++n) {
    if (acc.infinity) {
      res.torsion = true;
      res.order = n;
      break;
    }
    acc = add(E, acc, P);
  }
  if (!res.torsion) return res;
  if (res.order == 1) return res;  // the identity
  // cross-check: the order of a torsion point divides #E(F_p) at good odd p
  auto [Ei, map] = integral_model(E);
  uint32_t p1 = next_good_prime(Ei, 5);
  uint32_t p2 = next_good_prime(Ei, p1 + 1);
  for (uint32_t p : {p1, p2}) {
    long n = count_points_mod_p(Ei, p);
    if (n % res.order != 0)
      throw verify_error("torsion order fails the #E(F_p) divisibility cross-check");
  }
  return res;
}

HeightResult canonical_height(const WeierstrassQ& E, const CurvePoint& P, mpfr_prec_t prec) {
  if (prec < 16 || prec > 1 << 20) throw input_error("unreasonable height precision request");
  HeightResult out{Real(prec), false};
  auto tors = torsion_check(E, P);
  if (tors.torsion) {
    out.torsion = true;
    return out;  // exactly zero
  }
  auto [Ei, map] = integral_model(E);
  CurvePoint Q = map.apply(P);
  DupPair dup = make_dup(Ei);
  const QQ& x0 = Q.x;
  Real lam_inf = archimedean_part(dup, x0, prec);
  Real fin = finite_part(dup, x0, prec);
  Real logden = log(Real::of(q_den(x0), prec + 64));
  Real total = logden + lam_inf - fin;
  total.shift_down(1);  // normalization h(2P) = 4h(P), 37a value 0.0255557...
  Real result(prec);
  result += total;
  out.value = result;
  return out;
}

Real height_pairing(const WeierstrassQ& E, const CurvePoint& P, const CurvePoint& Q,
                    mpfr_prec_t prec) {
  HeightResult hP = canonical_height(E, P, prec);
  HeightResult hQ = canonical_height(E, Q, prec);
  HeightResult hPQ = canonical_height(E, add(E, P, Q), prec);
  Real r = hPQ.value - hP.value - hQ.value;
  r.shift_down(1);
  return r;
}

namespace {

struct GramInternal {
  std::vector<std::vector<Real>> G;
  mpfr_prec_t prec;
};

GramInternal pairing_matrix(const WeierstrassQ& E, const std::vector<CurvePoint>& pts,
                            mpfr_prec_t prec, unsigned jobs) {
  const size_t n = pts.size();
  // tasks: the n points, then the n(n-1)/2 pairwise sums; heights are pure
  // and run on a worker pool, assembly joins afterwards
  std::vector<CurvePoint> tasks;
  std::vector<std::pair<size_t, size_t>> idx;
  for (size_t i = 0; i < n; ++i) {
    tasks.push_back(pts[i]);
    idx.push_back({i, i});
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      tasks.push_back(add(E, pts[i], pts[j]));
      idx.push_back({i, j});
    }
  std::vector<Real> values(tasks.size(), Real(prec));
  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      size_t k = next.fetch_add(1);
      if (k >= tasks.size()) return;
      try {
        values[k] = canonical_height(E, tasks[k], prec).value;
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, tasks.empty() ? 1 : unsigned(tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);

  GramInternal gi{std::vector<std::vector<Real>>(n, std::vector<Real>(n, Real(prec))), prec};
  for (size_t i = 0; i < n; ++i) gi.G[i][i] = values[i];
  for (size_t k = n; k < tasks.size(); ++k) {
    auto [i, j] = idx[k];
    Real v = values[k] - values[i] - values[j];
    v.shift_down(1);
    gi.G[i][j] = v;
    gi.G[j][i] = v;
  }
  return gi;
}

}  // namespace

HeightGram gram(const WeierstrassQ& E, const std::vector<CurvePoint>& points, mpfr_prec_t prec,
                double tau, unsigned jobs) {
  for (const auto& P : points)
    if (!on_curve(E, P)) throw input_error("gram: point not on curve");
  GramInternal gi = pairing_matrix(E, points, prec, jobs);
  const size_t n = points.size();
  HeightGram out;
  out.points = points;
  out.precision = prec;
  out.matrix.assign(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out.matrix[i][j] = gi.G[i][j].to_double();
  if (n == 0) {
    out.det = 1;
    return out;
  }

  // symmetric elimination with diagonal pivoting, transform rows tracked
  std::vector<std::vector<Real>> A = gi.G;
  std::vector<std::vector<Real>> T(n, std::vector<Real>(n, Real(prec)));
  for (size_t i = 0; i < n; ++i) T[i][i] = Real::of(ZZ(1), prec);
  std::vector<bool> used(n, false);
  Real max_diag(prec);
  for (size_t i = 0; i < n; ++i) max_diag = max(max_diag, abs(A[i][i]));
  Real thresh = max_diag * Real::of(tau, prec);

  // phase 1: eliminate while the best remaining diagonal clears the threshold
  Real det = Real::of(ZZ(1), prec);
  int rank = 0;
  Real smallest_accepted(prec);
  while (true) {
    size_t best = n;
    for (size_t i = 0; i < n; ++i)
      if (!used[i] && (best == n || abs(A[i][i]) > abs(A[best][best]))) best = i;
    if (best == n) break;
    Real pivot = A[best][best];
    if (!(abs(pivot) > thresh)) break;
    det *= pivot;
    used[best] = true;
    ++rank;
    if (rank == 1 || abs(pivot) < smallest_accepted) smallest_accepted = abs(pivot);
    for (size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      Real factor = A[i][best] / pivot;
      for (size_t j = 0; j < n; ++j) {
        A[i][j] -= factor * A[best][j];
        T[i][j] -= factor * T[best][j];
      }
    }
  }
  // phase 2: rejected block contributes its (near-zero) diagonal to det
  for (size_t i = 0; i < n; ++i)
    if (!used[i]) det *= A[i][i];
  out.det = det.to_double();
  out.numerical_rank = rank;

  // residual of the rejected block and integer relation candidates
  if (rank < int(n)) {
    Real residual(prec);
    for (size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      residual = max(residual, abs(A[i][i]));
      // candidate relation: the transform row, scaled to small integers
      std::vector<double> row(n);
      double biggest = 0;
      for (size_t j = 0; j < n; ++j) {
        row[j] = T[i][j].to_double();
        biggest = std::max(biggest, std::fabs(row[j]));
      }
      double smallest = 0;
      for (double v : row)
        if (std::fabs(v) > 1e-9 * biggest && (smallest == 0 || std::fabs(v) < smallest))
          smallest = std::fabs(v);
      if (smallest == 0) continue;
      std::vector<long> rel(n);
      bool ok = true;
      for (size_t j = 0; j < n; ++j) {
        double scaled = row[j] / smallest;
        long r = std::lround(scaled);
        if (std::fabs(scaled - r) > 0.01 || std::llabs(r) > 1000) ok = false;
        rel[j] = r;
      }
      if (ok) out.relations.push_back(rel);
    }
    // conclusive only when rejected mass sits well below the accepted pivots
    if (rank > 0) {
      Real gap = smallest_accepted * Real::of(1e-3, prec);
      out.conclusive = residual < gap;
    }
  }
  return out;
}

IndependenceResult independence_test(const WeierstrassQ& E, const std::vector<CurvePoint>& points,
                                     mpfr_prec_t prec, double tau) {
  HeightGram g = gram(E, points, prec, tau);
  IndependenceResult res;
  res.independent_count = g.numerical_rank;
  res.conclusive = g.conclusive;
  res.relations = g.relations;
  return res;
}

}  // namespace ellsurf
