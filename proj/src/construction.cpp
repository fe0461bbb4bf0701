#include <algorithm>
#include <set>

#include "ellsurf/surface.hpp"

namespace ellsurf {

PolyZ LongWeierstrassForm::disc_T() const {
  PolyZ b2 = a1 * a1 + ZZ(4) * a2;
  PolyZ b4 = ZZ(2) * a4 + a1 * a3;
  PolyZ b6 = a3 * a3 + ZZ(4) * a6;
  PolyZ b8 = a1 * a1 * a6 + ZZ(4) * (a2 * a6) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return -(b2 * b2 * b8) - ZZ(8) * (b4 * b4 * b4) - ZZ(27) * (b6 * b6) + ZZ(9) * (b2 * b4 * b6);
}

bool on_surface(const SurfaceQT& s, const RatPointQT& pt) {
  if (const auto* q = s.quartic_form()) {
    if (pt.x.degree() > 0) return false;  // quartic entries use constant x
    QQ x0 = pt.x.coeff(0);
    PolyQ t4 = PolyQ::monomial(QQ(1), 4), t2 = PolyQ::monomial(QQ(1), 2);
    PolyQ rhs = q->A.eval(x0) * t4 + q->B.eval(x0) * t2 + PolyQ{q->C.eval(x0)};
    return pt.y * pt.y == rhs;
  }
  if (const auto* w = s.long_form()) {
    PolyQ a1 = to_polyq(w->a1), a2 = to_polyq(w->a2), a3 = to_polyq(w->a3), a4 = to_polyq(w->a4),
          a6 = to_polyq(w->a6);
    PolyQ lhs = pt.y * pt.y + a1 * pt.x * pt.y + a3 * pt.y;
    PolyQ rhs = pt.x * pt.x * pt.x + a2 * pt.x * pt.x + a4 * pt.x + a6;
    return lhs == rhs;
  }
  const auto* d = s.disc_form();
  // y(T)^2 = f(x(T), T): supported for constant x only (all catalog uses).
  if (pt.x.degree() > 0) throw input_error("on_surface: nonconstant x on discriminant form");
  PolyQ f_at_x = d->f.eval_x(pt.x.coeff(0));
  return pt.y * pt.y == f_at_x;
}

std::array<ZZ, 6> roots_to_elementary(const std::array<ZZ, 6>& roots) {
  std::set<ZZ> squares;
  for (const ZZ& r : roots) {
    if (r == 0) throw input_error("roots_to_elementary: zero root");
    squares.insert(r * r);
  }
  if (squares.size() != 6) throw input_error("roots_to_elementary: repeated root square");
  PolyZ prod{ZZ(1)};
  for (const ZZ& r : roots) prod *= PolyZ{-r * r, 1};
  std::array<ZZ, 6> R;
  for (int i = 0; i < 6; ++i) R[i] = prod.coeff(i);
  return R;
}

Rank6Params solve_rank6(const std::array<ZZ, 6>& roots) {
  Rank6Params p;
  p.roots = roots;
  p.R = roots_to_elementary(roots);
  const ZZ &R0 = p.R[0], &R1 = p.R[1], &R2 = p.R[2], &R3 = p.R[3], &R4 = p.R[4], &R5 = p.R[5];
  p.A = 64 * R0 * R0 * R0;
  p.c = 8 * R0 * R0;
  p.b = 4 * R0 * R1;
  p.a = 4 * R0 * R2 - R1 * R1;
  p.B = R5 * p.A - 2 * p.a;
  p.C = R4 * p.A - p.a * p.a - 2 * p.b;
  p.D = R3 * p.A - 2 * p.a * p.b - 2 * p.c;
  p.g = PolyZ{p.c, p.b, p.a, ZZ(1)};
  p.h = PolyZ{p.D, p.C, p.B, p.A - 1};
  p.d_T = p.g * p.g + PolyZ{0, 0, 0, 1} * p.h;
  // Closure of the construction: D_T factors over the chosen squares.
  PolyZ expect{p.A};
  for (const ZZ& r : roots) expect *= PolyZ{-r * r, 1};
  if (p.d_T != expect) throw verify_error("solve_rank6: D_T(x) does not factor as A * prod(x - rho_i^2)");
  return p;
}

SurfaceQT rank6_surface(const Rank6Params& p) {
  std::vector<PolyZ> rows;
  for (int i = 0; i <= 3; ++i) {
    PolyZ row{-p.h.coeff(i), 2 * p.g.coeff(i)};
    if (i == 3) row += PolyZ{0, 0, 1};  // x^3 T^2
    rows.push_back(row);
  }
  SurfaceQT s;
  s.form = DiscriminantForm{BiPoly(std::move(rows))};
  s.provenance = "rank6-discriminant";
  return s;
}

namespace {

void absorb_primes(const ZZ& n, uint32_t bound, std::set<ZZ>& primes, std::vector<ZZ>& rough) {
  if (n == 0) return;
  auto pf = trial_factor(n, bound);
  for (const auto& [p, e] : pf.primes) primes.insert(p);
  if (pf.cofactor > 1) {
    if (is_prime(pf.cofactor)) {
      primes.insert(pf.cofactor);
    } else {
      rough.push_back(pf.cofactor);
    }
  }
}

}  // namespace

AdmissibilityReport admissibility_check(const Rank6Params& p, uint32_t trial_bound) {
  AdmissibilityReport rep;
  ZZ sqrtA;
  if (!is_square(p.A, &sqrtA))
    throw input_error("admissibility_check: A is not a perfect square; no rational t1, t2");
  rep.t1 = sqrtA - 1;
  rep.t2 = -sqrtA - 1;
  auto d_of = [&](const ZZ& t) -> ZZ {
    ZZ u = 2 * p.b * t - p.C;
    return u * u - 4 * (2 * p.a * t - p.B) * (2 * p.c * t - p.D);
  };
  rep.d_t1 = d_of(rep.t1);
  rep.d_t2 = d_of(rep.t2);
  rep.d_t2_display = d_of(ZZ(-rep.t2));
  rep.admissible = rep.d_t1 != 0 && rep.d_t2 != 0;
  std::set<ZZ> primes;
  std::vector<ZZ> sources{rep.d_t1, rep.d_t2, p.a,    p.b,    p.c,
                          p.A,      p.B,      p.C,    p.D,    ZZ(rep.t1 - rep.t2),
                          rep.t1,   rep.t2};
  for (const ZZ& v : sources) absorb_primes(v, trial_bound, primes, rep.rough_cofactors);
  rep.bad_primes.assign(primes.begin(), primes.end());
  return rep;
}

Rank6Weierstrass rank6_to_weierstrass(const Rank6Params& p) {
  PolyZ scale{1 - p.A, 2, 1};  // T^2 + 2T - A + 1
  PolyZ a2{-p.B, 2 * p.a};
  PolyZ a4 = PolyZ{-p.C, 2 * p.b} * scale;
  PolyZ a6 = PolyZ{-p.D, 2 * p.c} * scale * scale;
  Rank6Weierstrass out;
  out.surface.form = LongWeierstrassForm{PolyZ(), a2, PolyZ(), a4, a6};
  out.surface.provenance = "rank6-weierstrass";
  // Depress: x -> x - a2/3 gives y^2 = x^3 + A(T) x + B(T).
  PolyQ qa2 = to_polyq(a2), qa4 = to_polyq(a4), qa6 = to_polyq(a6);
  QQ third = make_q(1, 3);
  out.short_A = qa4 - third * (qa2 * qa2);
  out.short_B = qa6 - third * (qa2 * qa4) + make_q(2, 27) * (qa2 * qa2 * qa2);
  return out;
}

Rationality classify_rationality(const PolyQ& short_A, const PolyQ& short_B) {
  PolyQ disc = QQ(-16) * (QQ(4) * (short_A * short_A * short_A) + QQ(27) * (short_B * short_B));
  if (disc.is_zero()) throw input_error("classify_rationality: singular surface (discriminant = 0)");
  int da = short_A.degree(), db = short_B.degree();
  int m = std::max(3 * da, 2 * db);
  if (0 < m && m < 12) return Rationality::rational;
  if (3 * da == 12 && 2 * db == 12) {
    // ord_{T=0} T^12 disc(1/T) = 0 means disc has exact degree 12.
    if (disc.degree() == 12) return Rationality::rational;
  }
  return Rationality::undetermined;
}

QuarticVariantReport quartic_variant_check(const PolyZ& g, const PolyZ& h, const ZZ& gamma) {
  if (g.degree() != 4 || g.leading() != 1) throw input_error("quartic variant: g must be monic of degree 4");
  if (g.coeff(0) == 0) throw input_error("quartic variant: g(0) = d must be nonzero (x = 0 t-sum)");
  if (h.degree() != 4 || h.leading() != -1)
    throw input_error("quartic variant: h must have degree 4 with leading -1 so the x^4 coefficient is (T+1)^2");
  if (gamma == 0) throw input_error("quartic variant: gamma must be nonzero");
  QuarticVariantReport rep;
  rep.d_T = g * g + PolyZ{0, 0, 0, 0, 1} * h;
  if (rep.d_T.degree() != 7) return rep;  // x^8 must cancel, and degree must not drop further
  auto roots = rational_roots(to_polyq(rep.d_T));
  int total = 0;
  for (const auto& [r, m] : roots) {
    if (r == 0) return rep;
    total += m;
    if (m > 1) return rep;
  }
  if (total != 7) return rep;
  rep.splits = true;
  for (const auto& [r, m] : roots) rep.roots.push_back(QQ(gamma * gamma) * r);  // rho_i = gamma^2 * x_i
  return rep;
}

namespace {

// y(T) for a type-(4) point: sqrt(A) * (T^2 + B/(2A)).
RatPointQT discriminant_root_point(const QuarticTForm& s, const QQ& x0, const QQ& sqrtA) {
  RatPointQT pt;
  pt.x = PolyQ{x0};
  QQ shift = s.B.eval(x0) / (2 * s.A.eval(x0));
  pt.y = PolyQ{sqrtA * shift, QQ(0), sqrtA};
  return pt;
}

std::set<QQ> rational_root_set(const PolyQ& p) {
  std::set<QQ> out;
  if (p.is_zero()) return out;
  for (const auto& [r, m] : rational_roots(p)) out.insert(r);
  return out;
}

}  // namespace

std::vector<RatPointQT> quartic_special_points(const QuarticTForm& s) {
  std::vector<RatPointQT> pts;
  std::set<QQ> used;
  SurfaceQT surf;
  surf.form = s;
  auto push_checked = [&](const RatPointQT& pt, const QQ& x0) {
    if (used.count(x0)) return;
    if (!on_surface(surf, pt)) throw verify_error("quartic_special_points: constructed point off surface");
    pts.push_back(pt);
    used.insert(x0);
  };

  std::set<QQ> rootsA = rational_root_set(s.A);
  std::set<QQ> rootsB = rational_root_set(s.B);
  std::set<QQ> rootsC = rational_root_set(s.C);

  // (1) A = B = 0, C a nonzero square: constant point (x0, sqrt(C)).
  for (const QQ& x0 : rootsA) {
    if (!rootsB.count(x0)) continue;
    QQ sq;
    QQ cv = s.C.eval(x0);
    if (cv != 0 && is_square(cv, &sq)) push_checked({PolyQ{x0}, PolyQ{sq}}, x0);
  }
  // (2) A = C = 0, B a nonzero square: point (x0, sqrt(B) T).
  for (const QQ& x0 : rootsA) {
    if (!rootsC.count(x0)) continue;
    QQ sq;
    QQ bv = s.B.eval(x0);
    if (bv != 0 && is_square(bv, &sq)) push_checked({PolyQ{x0}, PolyQ{QQ(0), sq}}, x0);
  }
  // (3) B = C = 0, A a nonzero square: point (x0, sqrt(A) T^2) -- also a
  // root of B^2 - 4AC, so fold into the discriminant scan below.
  PolyQ disc = s.B * s.B - QQ(4) * (s.A * s.C);
  if (!disc.is_zero()) {
    for (const auto& [x0, mult] : rational_roots(disc)) {
      QQ av = s.A.eval(x0);
      QQ sq;
      if (av != 0 && is_square(av, &sq)) push_checked(discriminant_root_point(s, x0, sq), x0);
    }
  }
  return pts;
}

HigherDegreeReport higher_degree_d1_d2(const PolyQ& A, const PolyQ& B, const PolyQ& C,
                                       const PolyQ& D, const PolyQ& E) {
  if (A.degree() > 2 || E.degree() > 2 || B.degree() > 4 || C.degree() > 4 || D.degree() > 4)
    throw input_error("higher_degree_d1_d2: degree bounds deg(A,E) <= 2, deg(B,C,D) <= 4 violated");
  HigherDegreeReport rep;
  PolyQ A2 = A * A;
  PolyQ A4 = A2 * A2;
  rep.d1 = QQ(8) * (A4 * D) - QQ(4) * (A2 * B * C) + B * B * B;
  rep.d2 = QQ(64) * (A4 * A2 * E * E) - QQ(16) * (A4 * C * C) - B * B * B * B +
           QQ(8) * (A2 * C * B * B);
  rep.degree_bounds_ok = rep.d1.degree() <= 12 && rep.d2.degree() <= 16;
  return rep;
}

PolyQ certify_square_fiber(const PolyQ& A, const PolyQ& B, const PolyQ& C, const PolyQ& D,
                           const PolyQ& E, const QQ& x0) {
  QQ a = A.eval(x0), b = B.eval(x0), c = C.eval(x0), d = D.eval(x0), e = E.eval(x0);
  if (a == 0) throw input_error("certify_square_fiber: A(x0) = 0");
  PolyQ f{e * e, d, c, b, a * a};
  auto root = poly_sqrt(f);
  if (!root) throw verify_error("certify_square_fiber: fiber is not a perfect square");
  return *root;
}

}  // namespace ellsurf
