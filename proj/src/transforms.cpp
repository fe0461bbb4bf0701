#include "ellsurf/transforms.hpp"

#include <set>

namespace ellsurf {

QQ depressed_g2(const DepressedQuartic& q) { return q.e + 3 * q.c * q.c; }
QQ depressed_g3(const DepressedQuartic& q) { return q.c * q.c * q.c - q.c * q.e - q.d * q.d; }

QuarticToCubic depressed_quartic_to_cubic(const DepressedQuartic& q) {
  const QQ g2 = depressed_g2(q), g3 = depressed_g3(q);
  QuarticToCubic out;
  // Y^2 = 4X^3 - g2 X - g3 rescaled to y^2 = x^3 - (g2/4) x - (g3/4), y = Y/2.
  out.curve = WeierstrassQ::make(0, 0, 0, -g2 / 4, -g3 / 4);
  const QQ c = q.c, d = q.d;
  out.map.forward = [c, d](const QQ& u, const QQ& v) -> std::optional<CurvePoint> {
    QQ X = (u * u + v - c) / 2;
    QQ Y = u * u * u + u * v - 3 * c * u + d;
    return CurvePoint(X, Y / 2);
  };
  out.map.inverse = [c, d](const CurvePoint& P) -> std::optional<std::pair<QQ, QQ>> {
    if (P.infinity) return std::nullopt;  // infinity comes from the quartic's points at infinity
    if (P.x == c) return std::nullopt;    // 2x = (Y-d)/(X-c) undefined
    QQ u = (2 * P.y - d) / (2 * (P.x - c));
    QQ v = -u * u + 2 * P.x + c;
    return std::pair{u, v};
  };
  return out;
}

std::array<QQ, 5> square_constant_coefficients(const SquareConstantQuartic& s) {
  if (s.q == 0) throw input_error("square-constant transform needs q != 0");
  const QQ a1 = s.d / s.q;
  const QQ a2 = s.c - s.d * s.d / (4 * s.q * s.q);
  const QQ a3 = 2 * s.q * s.b;
  const QQ a4 = -4 * s.q * s.q * s.a;
  return {a1, a2, a3, a4, a2 * a4};
}

QuarticToCubic square_constant_quartic_to_cubic(const SquareConstantQuartic& s) {
  auto [a1, a2, a3, a4, a6] = square_constant_coefficients(s);
  QuarticToCubic out;
  out.curve = WeierstrassQ::make(a1, a2, a3, a4, a6);
  const QQ a = s.a, b = s.b, c = s.c, d = s.d, q = s.q;
  const CurvePoint special(-a2, a1 * a2 - a3);
  out.map.forward = [a, b, c, d, q, special](const QQ& u, const QQ& v) -> std::optional<CurvePoint> {
    if (u == 0) {
      if (v == q) return std::nullopt;  // (0, q) corresponds to infinity
      if (v == -q) return special;
      throw input_error("square-constant forward map: (0, v) not on the quartic");
    }
    QQ x = (2 * q * (v + q) + d * u) / (u * u);
    QQ y = (4 * q * q * (v + q) + 2 * q * (d * u + c * u * u) - d * d * u * u / (2 * q)) / (u * u * u);
    return CurvePoint(x, y);
  };
  out.map.inverse = [a, b, c, d, q, special](const CurvePoint& P) -> std::optional<std::pair<QQ, QQ>> {
    if (P.infinity) return std::pair{QQ(0), q};
    if (P == special) return std::pair{QQ(0), -q};
    if (P.y == 0) return std::nullopt;
    QQ u = (2 * q * (P.x + c) - d * d / (2 * q)) / P.y;
    if (u == 0) return std::nullopt;
    QQ v = (P.x * u * u - d * u) / (2 * q) - q;
    return std::pair{u, v};
  };
  return out;
}

MonicQuartic leading_square_normalize(const std::array<QQ, 5>& quartic) {
  QQ s;
  if (quartic[4] == 0 || !is_square(quartic[4], &s))
    throw input_error("leading coefficient is not a nonzero rational square");
  MonicQuartic out;
  out.scale = s;
  QQ s2 = s * s;
  for (int i = 0; i < 4; ++i) out.coeff[i] = quartic[i] / s2;
  out.coeff[4] = 1;
  return out;
}

PolyQ require_square_leading(const PolyQ& leading) {
  auto root = poly_sqrt(leading);
  if (!root || leading.is_zero()) throw input_error("leading coefficient is not a polynomial square");
  return *root;
}

std::array<QQ, 5> specialize_quartic(const QuarticTForm& s, const QQ& t0) {
  QQ t2 = t0 * t0, t4 = t2 * t2;
  std::array<QQ, 5> out;
  for (int i = 0; i <= 4; ++i)
    out[i] = s.A.coeff(i) * t4 + s.B.coeff(i) * t2 + s.C.coeff(i);
  return out;
}

namespace {

// Quartic y^2 = q4 x^4 + ... + q0 over Q to a cubic: the square-constant
// route when q0 is a nonzero square, else normalize + depress + the
// depressed-quartic route. Point maps are composed through every step.
QuarticToCubic quartic_route_b1(const std::array<QQ, 5>& q) {
  MonicQuartic monic = leading_square_normalize(q);
  const QQ sh = monic.coeff[3] / 4;  // x -> x - sh kills the cubic term
  PolyQ mon{monic.coeff[0], monic.coeff[1], monic.coeff[2], monic.coeff[3], monic.coeff[4]};
  PolyQ dep = mon.compose_linear(QQ(1), -sh);
  if (dep.coeff(3) != 0) throw std::logic_error("depression failed");
  DepressedQuartic dq{-dep.coeff(2) / 6, dep.coeff(1) / 4, dep.coeff(0)};
  QuarticToCubic base = depressed_quartic_to_cubic(dq);
  QuarticToCubic out;
  out.curve = base.curve;
  const QQ s = monic.scale;
  auto fwd = base.map.forward;
  auto inv = base.map.inverse;
  out.map.forward = [s, sh, fwd](const QQ& u, const QQ& v) { return fwd(u + sh, v / s); };
  out.map.inverse = [s, sh, inv](const CurvePoint& P) -> std::optional<std::pair<QQ, QQ>> {
    auto uv = inv(P);
    if (!uv) return std::nullopt;
    return std::pair{uv->first - sh, s * uv->second};
  };
  return out;
}

QuarticToCubic quartic_route_b2(const std::array<QQ, 5>& q, bool negate_q) {
  QQ root;
  if (q[0] == 0 || !is_square(q[0], &root))
    throw input_error("constant term is not a nonzero rational square");
  if (negate_q) root = -root;
  return square_constant_quartic_to_cubic({q[4], q[3], q[2], q[1], root});
}

}  // namespace

QuarticToCubic quartic_to_cubic(const std::array<QQ, 5>& q, const std::string& route) {
  if (route == "b1" || route == "depressed") return quartic_route_b1(q);
  if (route == "b2" || route == "square-const") return quartic_route_b2(q, false);
  if (route == "b2neg") return quartic_route_b2(q, true);
  if (route == "auto") {
    QQ dummy;
    if (q[0] != 0 && is_square(q[0], &dummy)) return quartic_route_b2(q, false);
    return quartic_route_b1(q);
  }
  throw input_error("unknown quartic-to-cubic route: " + route);
}

CurvePoint specialize_point(const RatPointQT& pt, const QQ& t0) {
  return CurvePoint(pt.x.eval(t0), pt.y.eval(t0));
}

WeierstrassQ specialize(const SurfaceQT& s, const QQ& t0) {
  if (const auto* w = s.long_form()) {
    PolyZ dT = w->disc_T();
    if (to_polyq(dT).eval(t0) == 0)
      throw input_error("singular fiber at T = " + QQ(t0).get_str());
    return WeierstrassQ::make(to_polyq(w->a1).eval(t0), to_polyq(w->a2).eval(t0),
                              to_polyq(w->a3).eval(t0), to_polyq(w->a4).eval(t0),
                              to_polyq(w->a6).eval(t0));
  }
  if (const auto* d = s.disc_form()) {
    // y^2 = L x^3 + p x^2 + q x + r: clear L via X = Lx, Y = Ly.
    if (t0.get_den() != 1) throw input_error("discriminant-form specialization expects integral T");
    PolyZ fx = d->f.eval_T(q_num(t0));
    if (fx.degree() != 3)
      throw input_error("singular fiber at T = " + QQ(t0).get_str() + " (cubic degenerates)");
    QQ L = QQ(fx.coeff(3)), p = QQ(fx.coeff(2)), qc = QQ(fx.coeff(1)), r = QQ(fx.coeff(0));
    return WeierstrassQ::make(0, p, 0, qc * L, r * L * L);  // throws if the fiber is singular
  }
  const auto* qf = s.quartic_form();
  auto quartic = specialize_quartic(*qf, t0);
  return quartic_to_cubic(quartic, "auto").curve;
}

namespace {

bool kraus_ok_2(const ZZ& c4, const ZZ& c6) {
  ZZ r4 = ((c6 % 4) + 4) % 4;
  if (r4 == 3) return true;  // c6 = -1 mod 4
  ZZ r16 = ((c4 % 16) + 16) % 16;
  ZZ r32 = ((c6 % 32) + 32) % 32;
  return r16 == 0 && (r32 == 0 || r32 == 8);
}

bool kraus_ok_3(const ZZ& c6) {
  if (c6 == 0) return true;
  return v_adic(3, c6) != 2;
}

}  // namespace

MinimalModel minimal_model(const WeierstrassQ& E) {
  // Integral rescale.
  ZZ den = 1;
  for (const QQ* a : {&E.a1, &E.a2, &E.a3, &E.a4, &E.a6})
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q_den(*a).get_mpz_t());
  CurveMap to_int;
  to_int.u = make_q(1, den);
  WeierstrassQ Ei = to_int.apply(E);

  ZZ c4 = q_num(Ei.c4), c6 = q_num(Ei.c6), disc = q_num(Ei.disc);

  // Candidate primes for u: p^4 | c4 and p^6 | c6 (one side vacuous at 0).
  std::set<ZZ> cand{2, 3};
  ZZ G;
  if (c4 == 0)
    G = abs(c6);
  else if (c6 == 0)
    G = abs(c4);
  else
    mpz_gcd(G.get_mpz_t(), c4.get_mpz_t(), c6.get_mpz_t());
  auto pf = trial_factor(G, 1u << 20);
  for (const auto& [p, e] : pf.primes)
    if (e >= 4) cand.insert(p);
  if (pf.cofactor > 1) {
    try {
      for (const auto& [p, e] : factorize(pf.cofactor))
        if (e >= 4) cand.insert(p);
    } catch (const input_error&) {
      // cannot improve at unfactored primes; model stays integral there
    }
  }

  ZZ u = 1;
  for (const ZZ& p : cand) {
    long vp4 = c4 == 0 ? 1 << 30 : v_adic(p, c4);
    long vp6 = c6 == 0 ? 1 << 30 : v_adic(p, c6);
    long vpd = v_adic(p, disc);
    long dp = std::min(std::min(vp4 / 4, vp6 / 6), vpd / 12);
    if (p == 2 || p == 3) {
      while (dp > 0) {
        ZZ pk4, pk6;
        mpz_ui_pow_ui(pk4.get_mpz_t(), mpz_get_ui(p.get_mpz_t()), 4 * dp);
        mpz_ui_pow_ui(pk6.get_mpz_t(), mpz_get_ui(p.get_mpz_t()), 6 * dp);
        ZZ c4p = c4 / pk4, c6p = c6 / pk6;
        bool ok = p == 2 ? kraus_ok_2(c4p, c6p) : kraus_ok_3(c6p);
        if (ok) break;
        --dp;
      }
    }
    for (long i = 0; i < dp; ++i) u *= p;
  }

  ZZ u4 = u * u * u * u, u6 = u4 * u * u;
  ZZ c4m = c4 / u4, c6m = c6 / u6;

  // Reduced model from the minimal invariants.
  ZZ b2 = ((-c6m % 12) + 12) % 12;
  if (b2 > 6) b2 -= 12;
  ZZ b4 = b2 * b2 - c4m;
  if (b4 % 24 != 0) throw std::logic_error("minimal model: b4 reconstruction not integral");
  b4 /= 24;
  ZZ b6 = -b2 * b2 * b2 + 36 * b2 * b4 - c6m;
  if (b6 % 216 != 0) throw std::logic_error("minimal model: b6 reconstruction not integral");
  b6 /= 216;
  ZZ a1 = ((b2 % 2) + 2) % 2;
  ZZ a2 = b2 - a1;
  if (a2 % 4 != 0) throw std::logic_error("minimal model: a2 reconstruction not integral");
  a2 /= 4;
  ZZ a3 = ((b6 % 2) + 2) % 2;
  ZZ a4 = b4 - a1 * a3;
  if (a4 % 2 != 0) throw std::logic_error("minimal model: a4 reconstruction not integral");
  a4 /= 2;
  ZZ a6 = b6 - a3;
  if (a6 % 4 != 0) throw std::logic_error("minimal model: a6 reconstruction not integral");
  a6 /= 4;

  MinimalModel out;
  out.curve = WeierstrassQ::make(QQ(a1), QQ(a2), QQ(a3), QQ(a4), QQ(a6));

  // Solve the connecting map original -> minimal from the linear relations.
  CurveMap m;
  m.u = to_int.u * QQ(u);
  m.s = (out.curve.a1 * m.u - E.a1) / 2;
  m.r = (out.curve.a2 * m.u * m.u - E.a2 + m.s * E.a1 + m.s * m.s) / 3;
  m.t = (out.curve.a3 * m.u * m.u * m.u - E.a3 - m.r * E.a1) / 2;
  WeierstrassQ check = m.apply(E);
  if (!(check == out.curve)) throw std::logic_error("minimal model: connecting map mismatch");
  out.map = m;
  return out;
}

}  // namespace ellsurf
