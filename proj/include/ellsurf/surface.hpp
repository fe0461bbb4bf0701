// Curve families over Q(T): the rank-6 discriminant construction, the
// quartic-in-T constructors, the catalog of explicit curves, and the
// higher-degree D_1/D_2 vanishing conditions.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "ellsurf/bipoly.hpp"
#include "ellsurf/poly.hpp"

namespace ellsurf {

// y^2 = f(x,T), f quadratic in T with cubic x-leading block.
struct DiscriminantForm {
  BiPoly f;
};

// y^2 + a1(T) x y + a3(T) y = x^3 + a2(T) x^2 + a4(T) x + a6(T)
struct LongWeierstrassForm {
  PolyZ a1, a2, a3, a4, a6;
  PolyZ disc_T() const;  // discriminant polynomial in T (not identically 0)
};

// y^2 = A(x) T^4 + B(x) T^2 + C(x)
struct QuarticTForm {
  PolyQ A, B, C;
};

struct SurfaceQT {
  std::variant<DiscriminantForm, LongWeierstrassForm, QuarticTForm> form;
  std::string provenance;

  const DiscriminantForm* disc_form() const { return std::get_if<DiscriminantForm>(&form); }
  const LongWeierstrassForm* long_form() const { return std::get_if<LongWeierstrassForm>(&form); }
  const QuarticTForm* quartic_form() const { return std::get_if<QuarticTForm>(&form); }
};

// Point with coordinates that are polynomials in T over Q.
struct RatPointQT {
  PolyQ x, y;
};

bool on_surface(const SurfaceQT& s, const RatPointQT& pt);  // exact identity in T

// Six chosen square roots rho_i and the derived construction constants.
struct Rank6Params {
  std::array<ZZ, 6> roots;                    // rho_1..rho_6
  std::array<ZZ, 6> R;                        // R_0..R_5 of prod (x - rho_i^2)
  ZZ a, b, c, A, B, C, D;
  PolyZ g, h;                                 // g = x^3+ax^2+bx+c, h = (A-1)x^3+Bx^2+Cx+D
  PolyZ d_T;                                  // g^2 + x^3 h = A prod (x - rho_i^2)
};

// Coefficients R_0..R_5 of prod_i (x - rho_i^2) = x^6 + R5 x^5 + ... + R0.
// Roots must be nonzero with pairwise distinct squares.
std::array<ZZ, 6> roots_to_elementary(const std::array<ZZ, 6>& roots);

Rank6Params solve_rank6(const std::array<ZZ, 6>& roots);

// y^2 = f(x,T) with f = x^3 T^2 + 2 g(x) T - h(x).
SurfaceQT rank6_surface(const Rank6Params& p);

struct AdmissibilityReport {
  ZZ t1, t2;          // roots sqrt(A) - 1 and -sqrt(A) - 1 of T^2 + 2T - A + 1
  ZZ d_t1, d_t2;      // D(t) = (2bt - C)^2 - 4 (2at - B)(2ct - D) at the roots
  ZZ d_t2_display;    // D(sqrt(A) + 1) = D(-t2): the value the source display factors
  bool admissible;    // D(t1) * D(t2) != 0
  std::vector<ZZ> bad_primes;     // primes up to the trial bound
  std::vector<ZZ> rough_cofactors;  // unfactored parts beyond the bound
};

AdmissibilityReport admissibility_check(const Rank6Params& p, uint32_t trial_bound = 1000000);

struct Rank6Weierstrass {
  SurfaceQT surface;       // long Weierstrass: a2 = 2aT - B, ...
  PolyQ short_A, short_B;  // y^2 = x^3 + short_A(T) x + short_B(T)
};

Rank6Weierstrass rank6_to_weierstrass(const Rank6Params& p);

enum class Rationality { rational, undetermined };

// Degree test for rational elliptic surfaces on the short form
// y^2 = x^3 + A(T) x + B(T); throws input_error on a singular surface.
Rationality classify_rationality(const PolyQ& short_A, const PolyQ& short_B);

// deg-4 g (monic, g(0) != 0) and deg-4 h (leading -1) variant: does
// g^2 + x^4 h factor as const * prod_{i=1}^{7} (gamma^2 x - rho_i)?
struct QuarticVariantReport {
  PolyZ d_T;                 // g^2 + x^4 h
  bool splits = false;       // 7 distinct nonzero rational roots
  std::vector<QQ> roots;     // the rho_i / gamma^2 when it splits
};

QuarticVariantReport quartic_variant_check(const PolyZ& g, const PolyZ& h, const ZZ& gamma);

// Special points of the biquadratic surface y^2 = A(x) T^4 + B(x) T^2 + C(x):
// common rational roots of coefficient pairs plus rational roots of
// B^2 - 4AC at which A is a nonzero rational square.
std::vector<RatPointQT> quartic_special_points(const QuarticTForm& s);

struct CatalogEntry {
  std::string name;         // CLI identifier
  std::string description;  // human-readable tag
  SurfaceQT surface;
  std::vector<RatPointQT> points;
  int claimed_rank;
};

// The four shipped curves with their listed points; every entry is
// re-verified on construction (throws verify_error on transcription slip).
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);

// D_1 = 8 A^4 D - 4 A^2 B C + B^3 and
// D_2 = 64 A^6 E^2 - 16 A^4 C^2 - B^4 + 8 A^2 C B^2 for the quartic
// f(x,T) = A^2 T^4 + B T^3 + C T^2 + D T + E^2.
struct HigherDegreeReport {
  PolyQ d1, d2;
  bool degree_bounds_ok;  // deg d1 <= 12, deg d2 <= 16
};

HigherDegreeReport higher_degree_d1_d2(const PolyQ& A, const PolyQ& B, const PolyQ& C,
                                       const PolyQ& D, const PolyQ& E);

// At a common root x0 of D_1, D_2 with A(x0) != 0, f(x0,T) must be a perfect
// square; returns its exact polynomial square root.
PolyQ certify_square_fiber(const PolyQ& A, const PolyQ& B, const PolyQ& C, const PolyQ& D,
                           const PolyQ& E, const QQ& x0);

}  // namespace ellsurf
