#include "ellsurf/json_io.hpp"

#include <cstdio>
#include <fstream>

namespace ellsurf {

Json to_json(const ZZ& z) { return z.get_str(); }

Json to_json(const QQ& q) { return Json{{"num", q_num(q).get_str()}, {"den", q_den(q).get_str()}}; }

Json to_json(const PolyZ& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

Json to_json(const PolyQ& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

Json to_json(const BiPoly& f) {
  Json arr = Json::array();
  for (int i = 0; i <= f.deg_x(); ++i) arr.push_back(to_json(f.x_coeff(i)));
  return arr;
}

Json to_json(const SurfaceQT& s) {
  Json j;
  if (const auto* d = s.disc_form()) {
    j["form"] = "discriminant";
    j["coeffs"] = Json{{"f", to_json(d->f)}};
  } else if (const auto* w = s.long_form()) {
    j["form"] = "long-weierstrass";
    j["coeffs"] = Json{{"a1", to_json(w->a1)},
                       {"a2", to_json(w->a2)},
                       {"a3", to_json(w->a3)},
                       {"a4", to_json(w->a4)},
                       {"a6", to_json(w->a6)}};
  } else if (const auto* q = s.quartic_form()) {
    j["form"] = "quartic-t";
    j["coeffs"] = Json{{"A", to_json(q->A)}, {"B", to_json(q->B)}, {"C", to_json(q->C)}};
  }
  j["provenance"] = s.provenance;
  return j;
}

Json to_json(const RatPointQT& pt) { return Json{{"x", to_json(pt.x)}, {"y", to_json(pt.y)}}; }

Json to_json(const CurvePoint& pt) {
  if (pt.infinity) return Json{{"infinity", true}};
  return Json{{"x", to_json(pt.x)}, {"y", to_json(pt.y)}};
}

Json to_json(const WeierstrassQ& E) {
  return Json{{"form", "weierstrass-q"},
              {"coeffs",
               Json{{"a1", to_json(E.a1)},
                    {"a2", to_json(E.a2)},
                    {"a3", to_json(E.a3)},
                    {"a4", to_json(E.a4)},
                    {"a6", to_json(E.a6)}}},
              {"disc", to_json(E.disc)}};
}

double round_for_output(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

Json to_json(const HeightGram& g) {
  Json j;
  j["precision_bits"] = long(g.precision);
  Json mat = Json::array();
  for (const auto& row : g.matrix) {
    Json r = Json::array();
    for (double v : row) r.push_back(round_for_output(v));
    mat.push_back(r);
  }
  j["matrix"] = mat;
  j["det"] = round_for_output(g.det);
  j["independent_count"] = g.numerical_rank;
  j["conclusive"] = g.conclusive;
  Json rels = Json::array();
  for (const auto& rel : g.relations) rels.push_back(rel);
  j["relations"] = rels;
  Json pts = Json::array();
  for (const auto& p : g.points) pts.push_back(to_json(p));
  j["points"] = pts;
  return j;
}

Json to_json(const AdmissibilityReport& rep) {
  Json j;
  j["t1"] = to_json(rep.t1);
  j["t2"] = to_json(rep.t2);
  j["D_t1"] = to_json(rep.d_t1);
  j["D_t2"] = to_json(rep.d_t2);
  j["D_t2_display"] = to_json(rep.d_t2_display);
  j["admissible"] = rep.admissible;
  Json bad = Json::array();
  for (const auto& p : rep.bad_primes) bad.push_back(p.get_str());
  j["bad_primes"] = bad;
  Json rough = Json::array();
  for (const auto& c : rep.rough_cofactors) rough.push_back(c.get_str());
  j["rough_cofactors"] = rough;
  return j;
}

ZZ zz_from_json(const Json& j) {
  if (!j.is_string()) throw input_error("expected integer as decimal string");
  return ZZ(j.get<std::string>());
}

QQ qq_from_json(const Json& j) {
  if (j.is_string()) return QQ(ZZ(j.get<std::string>()));
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw input_error("expected rational as {num, den} strings");
  return make_q(ZZ(j["num"].get<std::string>()), ZZ(j["den"].get<std::string>()));
}

PolyZ polyz_from_json(const Json& j) {
  std::vector<ZZ> c;
  for (const auto& e : j) c.push_back(zz_from_json(e));
  return PolyZ(std::move(c));
}

PolyQ polyq_from_json(const Json& j) {
  std::vector<QQ> c;
  for (const auto& e : j) c.push_back(qq_from_json(e));
  return PolyQ(std::move(c));
}

SurfaceQT surface_from_json(const Json& j) {
  SurfaceQT s;
  std::string form = j.at("form").get<std::string>();
  const Json& co = j.at("coeffs");
  if (form == "discriminant") {
    std::vector<PolyZ> rows;
    for (const auto& row : co.at("f")) rows.push_back(polyz_from_json(row));
    s.form = DiscriminantForm{BiPoly(std::move(rows))};
  } else if (form == "long-weierstrass") {
    s.form = LongWeierstrassForm{polyz_from_json(co.at("a1")), polyz_from_json(co.at("a2")),
                                 polyz_from_json(co.at("a3")), polyz_from_json(co.at("a4")),
                                 polyz_from_json(co.at("a6"))};
  } else if (form == "quartic-t") {
    s.form = QuarticTForm{polyq_from_json(co.at("A")), polyq_from_json(co.at("B")),
                          polyq_from_json(co.at("C"))};
  } else {
    throw input_error("unknown surface form: " + form);
  }
  if (j.contains("provenance")) s.provenance = j["provenance"].get<std::string>();
  return s;
}

WeierstrassQ weierstrass_from_json(const Json& j) {
  const Json& co = j.at("coeffs");
  return WeierstrassQ::make(qq_from_json(co.at("a1")), qq_from_json(co.at("a2")),
                            qq_from_json(co.at("a3")), qq_from_json(co.at("a4")),
                            qq_from_json(co.at("a6")));
}

CurvePoint curve_point_from_json(const Json& j) {
  if (j.contains("infinity") && j["infinity"].get<bool>()) return CurvePoint::at_infinity();
  return CurvePoint(qq_from_json(j.at("x")), qq_from_json(j.at("y")));
}

uint64_t fnv1a64(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

Json RunManifest::to_json() const {
  Json j;
  j["command"] = command;
  j["arguments"] = arguments;
  j["constants"] = constants;
  j["version"] = version;
  j["timings_ms"] = timings_ms;
  Json outs = Json::array();
  for (const auto& [path, digest] : output_digests) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
    outs.push_back(Json{{"path", path}, {"fnv1a64", buf}});
  }
  j["outputs"] = outs;
  return j;
}

void write_output(const Json& doc, const std::string& path, RunManifest& manifest) {
  std::string text = doc.dump(2);
  text.push_back('\n');
  manifest.output_digests.push_back({path.empty() ? "<stdout>" : path, fnv1a64(text)});
  if (path.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot open output file: " + path);
    out << text;
  }
}

}  // namespace ellsurf
