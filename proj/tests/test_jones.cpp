#include <doctest.h>

#include "ajc/errors.hpp"
#include "ajc/jones.hpp"
#include "ajc/recurrence.hpp"
#include "helpers.hpp"

using namespace ajc;
using namespace ajc::test;

namespace {
const KnotDiagram& trefoil_pd() {
  static const KnotDiagram d = KnotDiagram::from_pd({{{4, 2, 5, 1}, {6, 4, 1, 3}, {2, 6, 3, 5}}});
  return d;
}
const KnotDiagram& figure8_pd() {
  static const KnotDiagram d = KnotDiagram::from_pd({{{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}}});
  return d;
}
const KnotDiagram& t25_pd() {
  static const KnotDiagram d =
      KnotDiagram::from_pd({{{6, 2, 7, 1}, {8, 4, 9, 3}, {10, 6, 1, 5}, {2, 8, 3, 7}, {4, 10, 5, 9}}});
  return d;
}
}  // namespace

TEST_CASE("jones: diagrams") {
  CHECK(trefoil_pd().writhe() == 3);
  CHECK(figure8_pd().writhe() == 0);
  CHECK(trefoil_pd().mirror().writhe() == -3);
  CHECK_THROWS_AS(KnotDiagram::from_pd({{{1, 2, 3, 4}}}), InvalidInput);
  CHECK_THROWS_AS(KnotDiagram::from_pd({{{4, 2, 5, 1}, {6, 4, 1, 3}, {2, 6, 3, 7}}}), InvalidInput);
}

TEST_CASE("jones: normalization") {
  for (long n = 1; n <= 6; ++n) {
    LaurentT expect;
    for (long k = 0; k < n; ++k) expect += T(static_cast<int>(2 * n - 2 - 4 * k));
    CHECK(jones_unknot(n) == expect);
    if (n <= 5) CHECK(jones_bracket_oracle(KnotDiagram(), n) == expect);
  }
  CHECK(jones_bracket_oracle(trefoil_pd(), 1) == LaurentT(1));
  CHECK(jones_bracket_oracle(figure8_pd(), 1) == LaurentT(1));
  for (const JonesSeq& j : {torus_seq(2, 3), twist_seq(-1), twist_seq(2)}) {
    CHECK(j(0).is_zero());
    CHECK(j(1) == LaurentT(1));
    for (long n = 1; n <= 4; ++n) CHECK(j(-n) == -j(n));
  }
}

TEST_CASE("jones: trefoil Jones polynomial from the bracket") {
  const LaurentT expect = T(-2) + T(-6) + T(-10) - T(-18);
  CHECK(jones_bracket_oracle(trefoil_pd(), 2) == expect);
  CHECK(jones_torus(2, 3, 2) == expect);
}

TEST_CASE("jones: closed forms agree with the bracket oracle") {
  for (long n = 1; n <= 4; ++n) {
    CHECK(jones_torus(2, 3, n) == jones_bracket_oracle(trefoil_pd(), n));
    CHECK(jones_twist(1, n) == jones_torus(2, 3, n));
  }
  for (long n = 1; n <= 3; ++n) {
    CHECK(jones_twist(-1, n) == jones_bracket_oracle(figure8_pd(), n));
    CHECK(jones_torus(2, 5, n) == jones_bracket_oracle(t25_pd(), n));
  }
  CHECK_THROWS_AS(jones_torus(2, 4, 2), InvalidInput);
}

TEST_CASE("jones: mirror image") {
  const JonesSeq m = mirror_seq(torus_seq(2, 3));
  for (long n = 1; n <= 3; ++n) CHECK(m(n) == jones_bracket_oracle(trefoil_pd().mirror(), n));
}

TEST_CASE("jones: cables and the odd part") {
  const JonesSeq u = unknot_seq(), tref = torus_seq(2, 3);
  for (int r : {1, 3, -5, 13}) CHECK(cable_jones(tref, r)(1) == LaurentT(1));
  CHECK(cable_jones(u, 1)(2) == T(-6) * (T(4) * u(3) - u(1)));
  CHECK_THROWS_AS(cable_jones(u, 2), InvalidInput);
  const JonesSeq c = cable_jones(tref, 13);
  CHECK(c(0).is_zero());
  for (long n = 1; n <= 3; ++n) CHECK(c(-n) == -c(n));

  CHECK(odd_part(u)(0) == LaurentT(1));
  CHECK(odd_part(u)(1) == T(4) + LaurentT(1) + T(-4));
  CHECK(odd_part(tref)(2) == jones_bracket_oracle(trefoil_pd(), 5));
}

TEST_CASE("jones: cabling identity M^r (L + t^{-2r} M^{-2r}) J_cable = J(2n+1)") {
  for (const JonesSeq& j : {unknot_seq(), torus_seq(2, 3), twist_seq(-1)})
    for (int r : {1, 3, 7, 13, -7}) {
      const JonesSeq c = cable_jones(j, r);
      const TorusOp f = cable_factor(r);
      for (long n = 1; n <= 6; ++n) CHECK(apply(f, c, n) == j(2 * n + 1));
    }
}

TEST_CASE("jones: modular evaluation agrees with exact values") {
  const std::uint64_t p = 2305843009213693951ULL, tau = 987654321;
  for (const JonesSeq& j : {torus_seq(2, 3), twist_seq(-1), twist_seq(2), cable_jones(twist_seq(-1), 9),
                            odd_part(torus_seq(2, 5))}) {
    const auto v = j.eval_mod(8, tau, p);
    for (long n = 0; n <= 8; ++n) CHECK(v[static_cast<std::size_t>(n)] == j(n).eval_mod(tau, p));
  }
}
