// Canonical heights, height-pairing Gram matrices, and independence tests.
//
// The height is computed from the x-coordinate duplication orbit: the
// archimedean part as the renormalized real orbit of the homogeneous
// duplication pair, the finite part as the exact gcd ledger of the reduced
// integer orbit (every step gcd divides the resultant of the duplication
// pair, so the ledger runs modulo a fixed power of that resultant and needs
// no factorization). Normalization: h(2P) = 4h(P) with h((0,0)) on
// y^2 + y = x^3 - x approximately 0.02555570412.
#pragma once

#include "ellsurf/curve.hpp"
#include "ellsurf/poly.hpp"
#include "ellsurf/real.hpp"

#include <vector>

namespace ellsurf {

struct TorsionResult {
  bool torsion = false;
  int order = 0;  // set when torsion
};

// Mazur-bound scan n <= 12 with an #E(F_p) divisibility cross-check at two
// good primes.
TorsionResult torsion_check(const WeierstrassQ& E, const CurvePoint& P);

struct HeightResult {
  Real value;
  bool torsion = false;  // value is exactly 0
};

HeightResult canonical_height(const WeierstrassQ& E, const CurvePoint& P, mpfr_prec_t prec = 128);

Real height_pairing(const WeierstrassQ& E, const CurvePoint& P, const CurvePoint& Q,
                    mpfr_prec_t prec = 128);

struct HeightGram {
  std::vector<CurvePoint> points;
  std::vector<std::vector<double>> matrix;  // symmetric pairing matrix
  double det = 0;
  int numerical_rank = 0;
  mpfr_prec_t precision = 128;
  bool conclusive = true;  // false when the pivot/residual gap is too thin
  std::vector<std::vector<long>> relations;  // integer null-vector candidates
};

HeightGram gram(const WeierstrassQ& E, const std::vector<CurvePoint>& points,
                mpfr_prec_t prec = 128, double tau = 1e-6, unsigned jobs = 0);

struct IndependenceResult {
  int independent_count = 0;
  bool conclusive = true;
  std::vector<std::vector<long>> relations;
};

// Numerical rank of the Gram matrix; throws verify_error("inconclusive...")
// only through the conclusive flag, never silently.
IndependenceResult independence_test(const WeierstrassQ& E, const std::vector<CurvePoint>& points,
                                     mpfr_prec_t prec = 128, double tau = 1e-6);

// x(2P) = dup_num(x)/dup_den(x): the homogeneous duplication pair.
PolyZ duplication_numerator(const WeierstrassQ& E);    // x^4 - b4 x^2 - 2 b6 x - b8
PolyZ duplication_denominator(const WeierstrassQ& E);  // 4x^3 + b2 x^2 + 2 b4 x + b6

}  // namespace ellsurf
