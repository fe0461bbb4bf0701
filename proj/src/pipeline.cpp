#include "ellsurf/pipeline.hpp"

#include <cmath>

namespace ellsurf {

Rank6Bundle rank6_bundle(const std::array<ZZ, 6>& roots) {
  Rank6Bundle b;
  b.params = solve_rank6(roots);
  b.disc_surface = rank6_surface(b.params);
  b.weier = rank6_to_weierstrass(b.params);
  b.admissibility = admissibility_check(b.params);
  b.rationality = classify_rationality(b.weier.short_A, b.weier.short_B);
  return b;
}

QQ default_t0(const std::string& name) {
  if (name == "rank7") return QQ(20);
  if (name == "rank8") return QQ(1);
  if (name == "dep10") return QQ(3);  // first fiber where the span keeps rank 5
  return QQ(0);
}

HeightsRun surface_heights(const SurfaceQT& surface, const std::vector<RatPointQT>& points,
                           const QQ& t0, mpfr_prec_t prec, const std::string& route, double tau,
                           unsigned jobs) {
  HeightsRun run;
  run.t0 = t0;

  if (surface.long_form() != nullptr || surface.disc_form() != nullptr) {
    WeierstrassQ E = specialize(surface, t0);
    MinimalModel mm = minimal_model(E);
    run.minimal = mm.curve;
    for (const auto& pt : points) {
      CurvePoint P = specialize_point(pt, t0);
      if (!on_curve(E, P)) throw verify_error("point off curve during heights pipeline");
      run.points.push_back(mm.map.apply(P));
    }
  } else if (const auto* qf = surface.quartic_form()) {
    auto quartic = specialize_quartic(*qf, t0);
    std::string chosen = route;
    if (route == "auto") {
      // prefer the square-constant route with the sign that keeps every
      // specialized point inside the map's domain
      QQ root;
      if (quartic[0] != 0 && is_square(quartic[0], &root)) {
        chosen = "b2";
        for (const auto& pt : points) {
          if (pt.x.eval(t0) == 0 && pt.y.eval(t0) == root) chosen = "b2neg";
        }
      } else {
        chosen = "b1";
      }
    }
    QuarticToCubic tc = quartic_to_cubic(quartic, chosen);
    run.route = chosen;
    MinimalModel mm = minimal_model(tc.curve);
    run.minimal = mm.curve;
    for (const auto& pt : points) {
      QQ u = pt.x.eval(t0), v = pt.y.eval(t0);
      auto img = tc.map.forward(u, v);
      CurvePoint P = img ? *img : CurvePoint::at_infinity();
      if (!on_curve(tc.curve, P)) throw verify_error("transported point off the cubic");
      run.points.push_back(mm.map.apply(P));
    }
  } else {
    throw input_error("surface_heights: unsupported surface form");
  }

  run.gram_result = gram(run.minimal, run.points, prec, tau, jobs);
  return run;
}

HeightsRun catalog_heights(const std::string& name, const QQ& t0, mpfr_prec_t prec,
                           const std::string& route, double tau, unsigned jobs) {
  const CatalogEntry& entry = catalog_entry(name);
  HeightsRun run = surface_heights(entry.surface, entry.points, t0, prec, route, tau, jobs);
  run.curve_name = entry.name;
  return run;
}

DetMatch match_determinant(double det, double target, int dimension) {
  // Two convention factors: the per-point height normalization 2^(s*k), and
  // the embedding translation class: translating every point by
  // sum c_i P_i multiplies the Gram determinant by (1 + sum c_i)^2 exactly.
  DetMatch best;
  best.rel_error = 1e300;
  for (int s : {-1, 0, 1}) {
    for (int m = 0; m <= 4; ++m) {  // classes m and -(m+2) share a square
      double factor = double((1 + m) * (1 + m));
      double scaled = det * std::pow(2.0, double(s * dimension)) * factor;
      double err = std::fabs(scaled - target) / std::fabs(target);
      if (err < best.rel_error) {
        best.rel_error = err;
        best.scaled_det = scaled;
        best.scaling = s;
        best.translation_class = m;
      }
    }
  }
  return best;
}

}  // namespace ellsurf
