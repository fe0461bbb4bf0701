#include "ellsurf/bipoly.hpp"

namespace ellsurf {

BiPoly BiPoly::from_x_poly(const PolyZ& p) {
  std::vector<PolyZ> rows;
  for (int i = 0; i <= p.degree(); ++i) rows.push_back(PolyZ{p.coeff(i)});
  return BiPoly(std::move(rows));
}

BiPoly BiPoly::x_power_times(const PolyZ& t_poly, int xdeg) {
  std::vector<PolyZ> rows(xdeg + 1);
  rows[xdeg] = t_poly;
  return BiPoly(std::move(rows));
}

int BiPoly::deg_T() const {
  int d = -1;
  for (const auto& r : rows_) d = std::max(d, r.degree());
  return d;
}

PolyZ BiPoly::eval_x(const ZZ& x0) const {
  PolyZ acc;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = x0 * acc + *it;
  return acc;
}

PolyZ BiPoly::eval_T(const ZZ& t0) const {
  std::vector<ZZ> c;
  c.reserve(rows_.size());
  for (const auto& r : rows_) c.push_back(r.eval(t0));
  return PolyZ(std::move(c));
}

PolyQ BiPoly::eval_x(const QQ& x0) const {
  PolyQ acc;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = x0 * acc + to_polyq(*it);
  return acc;
}

PolyQ BiPoly::eval_T(const QQ& t0) const {
  std::vector<QQ> c;
  c.reserve(rows_.size());
  for (const auto& r : rows_) c.push_back(to_polyq(r).eval(t0));
  return PolyQ(std::move(c));
}

ZZ BiPoly::eval(const ZZ& x0, const ZZ& t0) const { return eval_x(x0).eval(t0); }

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  std::vector<PolyZ> rows(std::max(a.rows_.size(), b.rows_.size()));
  for (size_t i = 0; i < rows.size(); ++i) rows[i] = a.x_coeff(int(i)) + b.x_coeff(int(i));
  return BiPoly(std::move(rows));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  std::vector<PolyZ> rows(std::max(a.rows_.size(), b.rows_.size()));
  for (size_t i = 0; i < rows.size(); ++i) rows[i] = a.x_coeff(int(i)) - b.x_coeff(int(i));
  return BiPoly(std::move(rows));
}

PolyZ bipoly_discriminant_in_T(const BiPoly& f) {
  if (f.deg_T() != 2) throw input_error("bipoly_discriminant_in_T: deg_T must be 2");
  const int dx = f.deg_x();
  std::vector<ZZ> u, b, c;
  for (int i = 0; i <= dx; ++i) {
    u.push_back(f.coeff(i, 2));
    b.push_back(f.coeff(i, 1));
    c.push_back(f.coeff(i, 0));
  }
  PolyZ pu{std::vector<ZZ>(u)}, pb{std::vector<ZZ>(b)}, pc{std::vector<ZZ>(c)};
  PolyZ disc = pb * pb - ZZ(4) * (pu * pc);
  return exact_div(disc, ZZ(4));
}

}  // namespace ellsurf
