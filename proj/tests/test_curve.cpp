#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellsurf/curve.hpp"

using namespace ellsurf;

namespace {
const WeierstrassQ E37 = WeierstrassQ::make(0, 0, 1, -1, 0);  // y^2 + y = x^3 - x
}

TEST_CASE("curve invariants") {
  CHECK(E37.disc == 37);
  CHECK(E37.c4 == 48);
  CHECK(E37.c6 == -216);
  CHECK(E37.is_integral());
  CHECK_THROWS_AS(WeierstrassQ::make(0, 0, 0, 0, 0), input_error);  // singular
  auto E = WeierstrassQ::make(1, make_q(1, 2), 0, -1, 3);
  CHECK(!E.is_integral());
  CHECK(4 * E.b8 == E.b2 * E.b6 - E.b4 * E.b4);
}

TEST_CASE("group law basics") {
  CurvePoint P(0, 0);
  REQUIRE(on_curve(E37, P));
  CHECK(add(E37, P, CurvePoint::at_infinity()) == P);
  CHECK(add(E37, P, neg(E37, P)) == CurvePoint::at_infinity());
  CHECK(add(E37, P, P) == CurvePoint(1, 0));
  CHECK(mul(E37, 4, P) == CurvePoint(2, -3));
  CHECK(mul(E37, -1, P) == neg(E37, P));
  CHECK_THROWS_AS(add(E37, CurvePoint(5, 5), P), input_error);  // off-curve

  // y^2 = x^3 - x: (0,0) + (1,0) = (-1,0)
  auto E = WeierstrassQ::make(0, 0, 0, -1, 0);
  CHECK(add(E, CurvePoint(0, 0), CurvePoint(1, 0)) == CurvePoint(-1, 0));
}

TEST_CASE("group law is commutative and associative on random multiples") {
  CurvePoint P(0, 0);
  std::mt19937 rng(5);
  for (int iter = 0; iter < 100; ++iter) {
    ZZ m = int(rng() % 9) - 4, n = int(rng() % 9) - 4, k = int(rng() % 9) - 4;
    CurvePoint A = mul(E37, m, P), B = mul(E37, n, P), C = mul(E37, k, P);
    CHECK(add(E37, A, B) == add(E37, B, A));
    CHECK(add(E37, add(E37, A, B), C) == add(E37, A, add(E37, B, C)));
  }
}

TEST_CASE("curve maps compose, invert, and preserve points") {
  CurveMap m;
  m.u = make_q(2, 3);
  m.r = make_q(1, 2);
  m.s = QQ(-1);
  m.t = make_q(5, 7);
  WeierstrassQ E2 = m.apply(E37);
  CurvePoint P(0, 0);
  CurvePoint Q = m.apply(P);
  CHECK(on_curve(E2, Q));
  CurveMap back = m.inverse();
  CHECK(back.apply(E2) == E37);
  CHECK(back.apply(Q) == P);
  CurveMap id = m.then(back);
  CHECK(id.apply(E37) == E37);
  CHECK(id.apply(P) == P);
  // group law commutes with the iso
  CurvePoint twoP = add(E37, P, P);
  CHECK(m.apply(twoP) == add(E2, Q, Q));
}
