// Quartic-to-cubic birational transformations, fiber specialization, and
// global minimal models over Q.
#pragma once

#include <functional>
#include <optional>

#include "ellsurf/curve.hpp"
#include "ellsurf/surface.hpp"

namespace ellsurf {

// Coordinate maps between a quartic model v^2 = q(u) and a cubic model,
// with explicit domain exclusions.
struct PointMap {
  // (u, v) on the quartic -> point on the cubic; empty optional means the
  // image is the point at infinity.
  std::function<std::optional<CurvePoint>(const QQ&, const QQ&)> forward;
  // cubic point -> (u, v); empty when the input is outside the map's domain.
  std::function<std::optional<std::pair<QQ, QQ>>(const CurvePoint&)> inverse;
};

struct QuarticToCubic {
  WeierstrassQ curve;
  PointMap map;
};

// y^2 = x^4 - 6c x^2 + 4d x + e  ->  Y^2 = 4X^3 - g2 X - g3 with
// g2 = e + 3c^2, g3 = c^3 - ce - d^2, via 2x = (Y-d)/(X-c), y = -x^2+2X+c.
// The returned curve is the integral-friendly form y^2 = x^3 - (g2/4)x - g3/4
// (X = x, Y = 2y). Throws input_error when the image is singular.
struct DepressedQuartic {
  QQ c, d, e;
};
QuarticToCubic depressed_quartic_to_cubic(const DepressedQuartic& q);
QQ depressed_g2(const DepressedQuartic& q);
QQ depressed_g3(const DepressedQuartic& q);

// v^2 = a u^4 + b u^3 + c u^2 + d u + q^2 (q != 0)  ->
// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with a1 = d/q,
// a2 = c - d^2/(4q^2), a3 = 2qb, a4 = -4q^2 a, a6 = a2 a4.
// (0, q) -> infinity and (0, -q) -> (-a2, a1 a2 - a3).
struct SquareConstantQuartic {
  QQ a, b, c, d, q;
};
QuarticToCubic square_constant_quartic_to_cubic(const SquareConstantQuartic& s);
// The bare coefficient formulas (a1, a2, a3, a4, a6), usable even when the
// resulting equation is singular.
std::array<QQ, 5> square_constant_coefficients(const SquareConstantQuartic& s);

// Quartic with square leading coefficient s^2: rescale to a monic quartic
// via x -> x/s, y -> y/s (equation multiplied by s^2). Coefficients lowest
// degree first; throws input_error when the leading coefficient is not a
// nonzero rational square.
struct MonicQuartic {
  std::array<QQ, 5> coeff;  // monic: coeff[4] = 1
  QQ scale;                 // s with (u, v) -> (s u, s v) mapping monic back
};
MonicQuartic leading_square_normalize(const std::array<QQ, 5>& quartic);

// Same check for a polynomial leading coefficient (the (T+1)^2 and
// (T^2+b3)^2 uses); returns its polynomial square root.
PolyQ require_square_leading(const PolyQ& leading);

// Dispatch a general quartic y^2 = q4 x^4 + ... + q0 to a cubic:
// route "b2"/"square-const" (constant term a square; "b2neg" picks -q),
// route "b1"/"depressed" (leading square, normalize and depress first),
// or "auto".
QuarticToCubic quartic_to_cubic(const std::array<QQ, 5>& q, const std::string& route);

// Exact specialization T = t0 of a surface to a Weierstrass curve over Q.
// Discriminant-form surfaces are rescaled to clear the cubic's leading
// coefficient. Throws input_error on a singular fiber (reported with t0).
WeierstrassQ specialize(const SurfaceQT& s, const QQ& t0);

// The quartic-in-x polynomial of a biquadratic surface at T = t0 (lowest
// degree first), for the quartic-to-cubic routes.
std::array<QQ, 5> specialize_quartic(const QuarticTForm& s, const QQ& t0);

// Specialize a T-polynomial point.
CurvePoint specialize_point(const RatPointQT& pt, const QQ& t0);

struct MinimalModel {
  WeierstrassQ curve;
  CurveMap map;  // original -> minimal
};

// Global minimal model via integral rescaling plus Laska-Kraus-Connell
// reduction; candidate primes from gcd(c4, c6) (c6 alone when c4 = 0).
MinimalModel minimal_model(const WeierstrassQ& E);

}  // namespace ellsurf
