// Integer bivariate polynomials f(x,T), stored as T-polynomials per x-power.
#pragma once

#include "ellsurf/poly.hpp"

namespace ellsurf {

class BiPoly {
 public:
  BiPoly() = default;
  // rows[i] is the coefficient of x^i, a polynomial in T.
  explicit BiPoly(std::vector<PolyZ> rows) : rows_(std::move(rows)) { trim(); }

  static BiPoly from_x_poly(const PolyZ& p);  // constant in T
  static BiPoly x_power_times(const PolyZ& t_poly, int xdeg);

  int deg_x() const { return static_cast<int>(rows_.size()) - 1; }
  int deg_T() const;
  bool is_zero() const { return rows_.empty(); }

  PolyZ x_coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(rows_.size())) return PolyZ();
    return rows_[i];
  }
  // coefficient of x^i T^j
  ZZ coeff(int i, int j) const { return x_coeff(i).coeff(j); }

  PolyZ eval_x(const ZZ& x0) const;   // polynomial in T
  PolyZ eval_T(const ZZ& t0) const;   // polynomial in x
  PolyQ eval_x(const QQ& x0) const;
  PolyQ eval_T(const QQ& t0) const;
  ZZ eval(const ZZ& x0, const ZZ& t0) const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.rows_ == b.rows_; }

 private:
  void trim() {
    while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
  }
  std::vector<PolyZ> rows_;
};

// One-fourth of the discriminant in T of a quadratic-in-T f: for
// f = u(x) T^2 + 2 v(x) T - w(x) this is v^2 + u*w. Requires deg_T = 2 and
// (b^2 - 4uc) divisible by 4; throws input_error otherwise.
PolyZ bipoly_discriminant_in_T(const BiPoly& f);

}  // namespace ellsurf
