// End-to-end verification pipelines: catalog entry -> cubic model ->
// minimal model -> height Gram matrix, and the rank-6 construction bundle.
#pragma once

#include "ellsurf/analytic.hpp"
#include "ellsurf/heights.hpp"
#include "ellsurf/transforms.hpp"

namespace ellsurf {

struct Rank6Bundle {
  Rank6Params params;
  SurfaceQT disc_surface;
  Rank6Weierstrass weier;
  AdmissibilityReport admissibility;
  Rationality rationality;
};

Rank6Bundle rank6_bundle(const std::array<ZZ, 6>& roots);

struct HeightsRun {
  std::string curve_name;
  QQ t0;                 // specialization parameter (unused for thm2.3)
  std::string route;     // quartic-to-cubic route actually used, "" if none
  WeierstrassQ minimal;  // model the Gram matrix lives on
  std::vector<CurvePoint> points;
  HeightGram gram_result;
};

// Generic surface pipeline: specialize at t0, transform biquadratic forms
// to a cubic (choosing the route), minimalize, transport the points, and
// assemble the Gram matrix.
HeightsRun surface_heights(const SurfaceQT& surface, const std::vector<RatPointQT>& points,
                           const QQ& t0, mpfr_prec_t prec, const std::string& route = "auto",
                           double tau = 1e-6, unsigned jobs = 0);

// Default parameters reproduce the source verification runs:
//   thm2.3 (t0 unused), rank7 at T = 20, rank8 at T = 1, dep10 at a good t0.
HeightsRun catalog_heights(const std::string& name, const QQ& t0, mpfr_prec_t prec,
                           const std::string& route = "auto", double tau = 1e-6,
                           unsigned jobs = 0);

QQ default_t0(const std::string& name);

// det * 2^(s*k) * (1+m)^2 for s in {-1, 0, +1} (height normalization,
// k = dimension) and small m (embedding translation class: shifting every
// point by sum c_i P_i with sum c_i = m scales the determinant by (1+m)^2).
struct DetMatch {
  int scaling = 0;            // chosen s
  int translation_class = 0;  // chosen m
  double scaled_det = 0;
  double rel_error = 0;
};
DetMatch match_determinant(double det, double target, int dimension);

}  // namespace ellsurf
