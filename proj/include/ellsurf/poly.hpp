// Dense univariate polynomials over ZZ / QQ, lowest degree first, no stored
// trailing zeros (the zero polynomial has an empty coefficient vector).
#pragma once

#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "ellsurf/numth.hpp"

namespace ellsurf {

template <class T>
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(const T& coeff, int deg) {
    std::vector<T> c(deg + 1, T(0));
    c[deg] = coeff;
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }

  T coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return T(0);
    return c_[i];
  }
  const T& leading() const { return c_.back(); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }

  friend Poly operator*(const T& s, const Poly& a) {
    Poly r = a;
    for (auto& v : r.c_) v = s * v;
    r.trim();
    return r;
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(unsigned e) const {
    Poly r{T(1)};
    Poly base = *this;
    while (e) {
      if (e & 1) r *= base;
      if (e >>= 1) base *= base;
    }
    return r;
  }

  // Horner evaluation in any ring U with U += and U *= from T.
  template <class U>
  U eval(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * x;
      acc = acc + U(*it);
    }
    return acc;
  }

  Poly derivative() const {
    if (degree() < 1) return Poly();
    std::vector<T> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = T(long(i)) * c_[i];
    return Poly(std::move(c));
  }

  // p(alpha*x + beta)
  Poly compose_linear(const T& alpha, const T& beta) const {
    Poly lin{beta, alpha};
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * lin;
      acc += Poly{*it};
    }
    return acc;
  }

  // x^n * p(1/x) for n >= degree.
  Poly reversed(int n) const {
    std::vector<T> c(n + 1, T(0));
    for (size_t i = 0; i < c_.size(); ++i) c[n - i] = c_[i];
    return Poly(std::move(c));
  }

  // multiply by x^k
  Poly shifted_up(int k) const {
    if (is_zero()) return Poly();
    std::vector<T> c(c_.size() + k, T(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return Poly(std::move(c));
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
      if (p.coeff(i) == T(0)) continue;
      if (!first) os << " + ";
      os << p.coeff(i);
      if (i > 0) os << "*x^" << i;
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

using PolyZ = Poly<ZZ>;
using PolyQ = Poly<QQ>;

PolyQ to_polyq(const PolyZ& p);

// Scale a rational polynomial to a primitive integer one; returns the
// multiplier m with  m * p = result  (m > 0).
PolyZ clear_denominators(const PolyQ& p, QQ* multiplier = nullptr);

ZZ content(const PolyZ& p);  // gcd of coefficients, 0 for the zero poly

// Exact division; throws input_error if not divisible.
PolyZ exact_div(const PolyZ& a, const ZZ& d);
PolyZ exact_div(const PolyZ& a, const PolyZ& b);

// Field division with remainder.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);

PolyQ poly_gcd(PolyQ a, PolyQ b);  // monic gcd over QQ

// Exact square root of a perfect-square polynomial (empty when not square).
std::optional<PolyQ> poly_sqrt(const PolyQ& p);

// Resultant via fraction-free Bareiss elimination on the Sylvester matrix.
ZZ resultant(const PolyZ& a, const PolyZ& b);

// All rational roots with multiplicity, by content normalization and
// divisor testing of trailing/leading coefficients.
std::vector<std::pair<QQ, int>> rational_roots(const PolyQ& p);

// Reduce mod p (coefficients into [0,p)).
std::vector<uint32_t> reduce_poly(const PolyZ& f, uint32_t p);
uint32_t eval_mod(const std::vector<uint32_t>& coeffs, uint32_t x, uint32_t p);

// {x in [0,p) : f(x) = 0 mod p} by exhaustive evaluation; throws
// input_error when f vanishes identically mod p.
std::vector<uint32_t> poly_roots_mod_p(const PolyZ& f, uint32_t p);

}  // namespace ellsurf
