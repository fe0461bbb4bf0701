#include "ellsurf/curve.hpp"

namespace ellsurf {

WeierstrassQ WeierstrassQ::make(const QQ& a1, const QQ& a2, const QQ& a3, const QQ& a4, const QQ& a6) {
  WeierstrassQ E;
  E.a1 = a1;
  E.a2 = a2;
  E.a3 = a3;
  E.a4 = a4;
  E.a6 = a6;
  E.b2 = a1 * a1 + 4 * a2;
  E.b4 = 2 * a4 + a1 * a3;
  E.b6 = a3 * a3 + 4 * a6;
  E.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  E.c4 = E.b2 * E.b2 - 24 * E.b4;
  E.c6 = -E.b2 * E.b2 * E.b2 + 36 * E.b2 * E.b4 - 216 * E.b6;
  E.disc = -E.b2 * E.b2 * E.b8 - 8 * E.b4 * E.b4 * E.b4 - 27 * E.b6 * E.b6 + 9 * E.b2 * E.b4 * E.b6;
  if (4 * E.b8 != E.b2 * E.b6 - E.b4 * E.b4) throw std::logic_error("b-invariant identity broken");
  if (E.c4 * E.c4 * E.c4 - E.c6 * E.c6 != 1728 * E.disc) throw std::logic_error("c-invariant identity broken");
  if (E.disc == 0) throw input_error("singular Weierstrass equation (discriminant = 0)");
  return E;
}

bool WeierstrassQ::is_integral() const {
  for (const QQ* a : {&a1, &a2, &a3, &a4, &a6})
    if (q_den(*a) != 1) return false;
  return true;
}

bool on_curve(const WeierstrassQ& E, const CurvePoint& P) {
  if (P.infinity) return true;
  QQ lhs = P.y * P.y + E.a1 * P.x * P.y + E.a3 * P.y;
  QQ rhs = P.x * P.x * P.x + E.a2 * P.x * P.x + E.a4 * P.x + E.a6;
  return lhs == rhs;
}

CurvePoint neg(const WeierstrassQ& E, const CurvePoint& P) {
  if (P.infinity) return P;
  return CurvePoint(P.x, -P.y - E.a1 * P.x - E.a3);
}

CurvePoint add(const WeierstrassQ& E, const CurvePoint& P, const CurvePoint& Q) {
  if (!on_curve(E, P) || !on_curve(E, Q)) throw input_error("add: point not on this curve");
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  QQ lambda, nu;
  if (P.x == Q.x) {
    if (P.y != Q.y || Q == neg(E, P)) return CurvePoint::at_infinity();
    // tangent
    QQ denom = 2 * P.y + E.a1 * P.x + E.a3;
    lambda = (3 * P.x * P.x + 2 * E.a2 * P.x + E.a4 - E.a1 * P.y) / denom;
    nu = P.y - lambda * P.x;
  } else {
    lambda = (Q.y - P.y) / (Q.x - P.x);
    nu = P.y - lambda * P.x;
  }
  QQ x3 = lambda * lambda + E.a1 * lambda - E.a2 - P.x - Q.x;
  QQ y3 = -(lambda + E.a1) * x3 - nu - E.a3;
  return CurvePoint(x3, y3);
}

CurvePoint mul(const WeierstrassQ& E, const ZZ& n, const CurvePoint& P) {
  ZZ m = n;
  CurvePoint base = P;
  if (m < 0) {
    m = -m;
    base = neg(E, P);
  }
  CurvePoint acc = CurvePoint::at_infinity();
  while (m > 0) {
    if (mpz_odd_p(m.get_mpz_t())) acc = add(E, acc, base);
    m >>= 1;
    if (m > 0) base = add(E, base, base);
  }
  return acc;
}

WeierstrassQ CurveMap::apply(const WeierstrassQ& E) const {
  if (u == 0) throw input_error("curve map with u = 0");
  QQ u2 = u * u, u3 = u2 * u;
  QQ a1p = (E.a1 + 2 * s) / u;
  QQ a2p = (E.a2 - s * E.a1 + 3 * r - s * s) / u2;
  QQ a3p = (E.a3 + r * E.a1 + 2 * t) / u3;
  QQ a4p = (E.a4 - s * E.a3 + 2 * r * E.a2 - (t + r * s) * E.a1 + 3 * r * r - 2 * s * t) / (u2 * u2);
  QQ a6p = (E.a6 + r * E.a4 + r * r * E.a2 + r * r * r - t * E.a3 - t * t - r * t * E.a1) / (u3 * u3);
  return WeierstrassQ::make(a1p, a2p, a3p, a4p, a6p);
}

CurvePoint CurveMap::apply(const CurvePoint& P) const {
  if (P.infinity) return P;
  QQ u2 = u * u, u3 = u2 * u;
  QQ xp = (P.x - r) / u2;
  QQ yp = (P.y - s * (P.x - r) - t) / u3;
  return CurvePoint(xp, yp);
}

CurveMap CurveMap::inverse() const {
  CurveMap m;
  m.u = 1 / u;
  m.r = -r / (u * u);
  m.s = -s / u;
  m.t = (r * s - t) / (u * u * u);
  return m;
}

CurveMap CurveMap::then(const CurveMap& n) const {
  // x = u^2 x' + r with (u1,r1,s1,t1) then (u2,r2,s2,t2) applied to the
  // primed model composes to (u1 u2, ...).
  CurveMap m;
  m.u = u * n.u;
  m.r = u * u * n.r + r;
  m.s = u * n.s + s;
  m.t = u * u * u * n.t + u * u * s * n.r + t;
  return m;
}

}  // namespace ellsurf
