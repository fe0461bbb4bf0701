// JSON wire formats for curves, points, Gram reports, and run manifests.
// Exact integers and rationals always serialize as decimal strings
// ({"num","den"} objects for rationals); doubles are rounded to 15
// significant digits before serialization so reruns are byte-identical.
#pragma once

#include <json.hpp>

#include "ellsurf/heights.hpp"
#include "ellsurf/pipeline.hpp"
#include "ellsurf/surface.hpp"

namespace ellsurf {

using Json = nlohmann::ordered_json;

Json to_json(const ZZ& z);
Json to_json(const QQ& q);
Json to_json(const PolyZ& p);   // array of integer strings, lowest degree first
Json to_json(const PolyQ& p);   // array of rational objects
Json to_json(const BiPoly& f);  // rows by x-power
Json to_json(const SurfaceQT& s);
Json to_json(const RatPointQT& pt);
Json to_json(const CurvePoint& pt);
Json to_json(const WeierstrassQ& E);
Json to_json(const HeightGram& g);
Json to_json(const AdmissibilityReport& rep);

ZZ zz_from_json(const Json& j);
QQ qq_from_json(const Json& j);
PolyZ polyz_from_json(const Json& j);
PolyQ polyq_from_json(const Json& j);
SurfaceQT surface_from_json(const Json& j);
WeierstrassQ weierstrass_from_json(const Json& j);
CurvePoint curve_point_from_json(const Json& j);

// round to 15 significant digits for reproducible serialization
double round_for_output(double v);

uint64_t fnv1a64(const std::string& bytes);

struct RunManifest {
  std::string command;
  std::vector<std::string> arguments;
  Json constants;  // precision, tau, pmax, jobs, t0, ... (the run's knobs)
  std::string version;
  Json timings_ms;
  std::vector<std::pair<std::string, uint64_t>> output_digests;  // path, fnv1a64

  Json to_json() const;
};

// Serialize + write a JSON document and record its digest in the manifest.
void write_output(const Json& doc, const std::string& path, RunManifest& manifest);

}  // namespace ellsurf
