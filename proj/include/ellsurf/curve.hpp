// Long Weierstrass curves over Q with exact rational points and group law.
#pragma once

#include "ellsurf/numth.hpp"

namespace ellsurf {

struct WeierstrassQ {
  QQ a1, a2, a3, a4, a6;
  QQ b2, b4, b6, b8, c4, c6, disc;

  // Throws input_error("singular ...") when the discriminant vanishes.
  static WeierstrassQ make(const QQ& a1, const QQ& a2, const QQ& a3, const QQ& a4, const QQ& a6);

  bool is_integral() const;
  friend bool operator==(const WeierstrassQ& a, const WeierstrassQ& b) {
    return a.a1 == b.a1 && a.a2 == b.a2 && a.a3 == b.a3 && a.a4 == b.a4 && a.a6 == b.a6;
  }
};

struct CurvePoint {
  bool infinity = true;
  QQ x, y;

  CurvePoint() = default;
  CurvePoint(QQ px, QQ py) : infinity(false), x(std::move(px)), y(std::move(py)) {}
  static CurvePoint at_infinity() { return CurvePoint(); }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

bool on_curve(const WeierstrassQ& E, const CurvePoint& P);

CurvePoint neg(const WeierstrassQ& E, const CurvePoint& P);

// Chord-tangent addition; throws input_error when an input is off-curve
// (the operational form of a curve-mismatch).
CurvePoint add(const WeierstrassQ& E, const CurvePoint& P, const CurvePoint& Q);

CurvePoint mul(const WeierstrassQ& E, const ZZ& n, const CurvePoint& P);

// Change of coordinates x = u^2 x' + r, y = u^3 y' + s u^2 x' + t mapping a
// model E to the primed model.
struct CurveMap {
  QQ u = 1, r = 0, s = 0, t = 0;

  WeierstrassQ apply(const WeierstrassQ& E) const;
  CurvePoint apply(const CurvePoint& P) const;  // E-point to E'-point
  CurveMap inverse() const;
  CurveMap then(const CurveMap& next) const;  // this first, then next
};

}  // namespace ellsurf
