#include <doctest.h>

#include <functional>

#include "ajc/ajcheck.hpp"
#include "ajc/errors.hpp"
#include "ajc/knot_table.hpp"
#include "ajc/recurrence.hpp"
#include "helpers.hpp"

using namespace ajc;
using namespace ajc::test;

namespace {

CommPoly db(const std::string& name) { return *find_knot(bundled_table(), name).apoly; }

// A torus operator whose reduction at t = -1 is p: integer coefficients with even t-powers.
TorusOp lift(const CommPoly& p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> te(-3, 3);
  TorusOp op;
  for (const auto& [k, c] : p.terms()) op.add_term(PolyTM::monomial(c.get_num(), 2 * te(rng), k.second), k.first);
  return op;
}

const TorusOp& trefoil_odd() {
  static const TorusOp op = [] {
    GuessOptions o;
    o.engine = GuessEngine::Window;
    return guess(odd_part(torus_seq(2, 3)), 2, 44, 70, 0, 14, o)->op;
  }();
  return op;
}

const TorusOp& figure8_odd() {
  static const TorusOp op = [] {
    GuessOptions o;
    o.engine = GuessEngine::Specialize;
    return guess(odd_part(twist_seq(-1)), 3, 80, 400, 0, 180, o)->op;
  }();
  return op;
}

// Direct transcription of the published inequalities, written independently of theorem_range.
bool oracle_double_twist(int k, int l, int r) {
  if (k > 0 && l > 0) return r * (r - 4 * (k + l - 1)) > 0;
  if (k < 0 && l < 0) return r * (r - 4 * (k + l + 1)) > 0;
  return (r + 4 * k) * (r + 4 * l) > 0;
}

bool oracle_pretzel(int m, int r) {
  // cleared of denominators; the sign of the scale factor is tracked explicitly
  if (m >= 2) {
    const long num = 33L * m * m + 12 + 76L * m;  // 4m (33m/4 + 3/m + 19)
    return static_cast<long>(r) * (4L * m * r - num) > 0;
  }
  if (m == -2) return r * (r - 20) > 0;
  const long s = 8L * (2 * m + 3);                                        // negative for m <= -3
  const long b = 66L * m * (2 * m + 3) + 48 + 171L * (2 * m + 3);         // s * bound
  return (s * r - b) * (r - 20) * (s < 0 ? -1 : 1) > 0;
}

}  // namespace

TEST_CASE("ajcheck: constructed pairs match with a monomial cofactor") {
  std::mt19937_64 rng(71);
  for (const CommPoly& a : {CommPoly::L() + CommPoly::M(6), db("figure-8"), db("5_2")}) {
    const TorusOp alpha = lift((CommPoly::L() - 1) * a * CommPoly::M(3), rng);
    const AJVerdict v = aj_compare(alpha, a);
    CHECK(v.status == Verdict::Match);
    CHECK(v.convention == "direct");
    CHECK(v.cofactor_num.terms().size() == 1);
    CHECK(v.cofactor_den.terms().size() == 1);
  }
  CHECK_THROWS_AS(aj_compare(TorusOp(), CommPoly(1)), InvalidInput);
  CHECK_THROWS_AS(aj_compare(TorusOp(1), CommPoly()), InvalidInput);
}

TEST_CASE("ajcheck: M-only cofactors are accepted, L-dependent ones are not") {
  std::mt19937_64 rng(73);
  const CommPoly a = db("figure-8");
  const TorusOp alpha = lift((CommPoly::L() - 1) * a * (CommPoly::M(2) + 1), rng);
  const AJVerdict v = aj_compare(alpha, a);
  CHECK(v.status == Verdict::Match);
  CHECK(v.cofactor_num == CommPoly::M(2) + 1);
  const TorusOp beta = lift((CommPoly::L() - 1) * a * (CommPoly::L() + 1), rng);
  CHECK(aj_compare(beta, a).status == Verdict::Mismatch);
}

TEST_CASE("ajcheck: trefoil recurrence against the database") {
  const auto c = guess_auto(torus_seq(2, 3), 2, 1);
  REQUIRE(c);
  CHECK(aj_compare(c->op, db("trefoil")).status == Verdict::Match);
  CHECK(aj_compare(c->op, db("figure-8")).status == Verdict::Mismatch);
}

TEST_CASE("ajcheck: odd-part reduction equals R(L, M^2)") {
  const AJVerdict t = c3_check(trefoil_odd(), db("trefoil"));
  CHECK(t.status == Verdict::Match);
  const AJVerdict f = c3_check(figure8_odd(), db("figure-8"));
  CHECK(f.status == Verdict::Match);
  // drop the top coefficient
  TorusOp truncated;
  for (const auto& [k, a] : trefoil_odd().coeffs())
    if (k < trefoil_odd().max_l()) truncated.add_term(a, k);
  CHECK(c3_check(truncated, db("trefoil")).status == Verdict::Mismatch);
  CHECK(c3_check(trefoil_odd(), db("figure-8")).status == Verdict::Mismatch);
}

TEST_CASE("ajcheck: cable assembly") {
  CHECK(cable_aj_assemble(trefoil_odd(), db("trefoil"), 13).status == Verdict::Match);
  CHECK(cable_aj_assemble(figure8_odd(), db("figure-8"), 9).status == Verdict::Match);
  CHECK(cable_aj_assemble(TorusOp(1), db("trefoil"), 13).status == Verdict::Mismatch);
  CHECK_THROWS_AS(cable_aj_assemble(trefoil_odd(), db("trefoil"), 4), InvalidInput);
  // a match of the odd-part identity carries over to every odd r
  for (int r : {-9, -7, -1, 1, 3, 5, 13, 21}) {
    CHECK(cable_aj_assemble(trefoil_odd(), db("trefoil"), r).status == Verdict::Match);
    CHECK(cable_aj_assemble(figure8_odd(), db("figure-8"), r).status == Verdict::Match);
  }
}

TEST_CASE("ajcheck: published ranges") {
  KnotClass dt;
  dt.kind = KnotClass::DoubleTwist;
  dt.k = 2, dt.l = 3;
  CHECK(theorem_range(dt, 17));
  dt.l = -3;
  CHECK_FALSE(theorem_range(dt, 7));
  KnotClass pz;
  pz.kind = KnotClass::Pretzel;
  pz.m = -2;
  CHECK(theorem_range(pz, 21));
  KnotClass tb;
  tb.c_plus = 3;
  CHECK(theorem_range(tb, 13));
  CHECK_FALSE(theorem_range(tb, 11));
  CHECK(theorem_range(tb, -1));

  dt.l = 2;
  CHECK_THROWS_AS(theorem_range(dt, 7), InvalidInput);
  dt.l = 0;
  CHECK_THROWS_AS(theorem_range(dt, 7), InvalidInput);
  pz.m = 1;
  CHECK_THROWS_AS(theorem_range(pz, 7), InvalidInput);
  pz.m = 3;
  CHECK_THROWS_AS(theorem_range(pz, 7), InvalidInput);
  pz.m = 4;
  CHECK_THROWS_AS(theorem_range(pz, 8), InvalidInput);
}

TEST_CASE("ajcheck: ranges agree with a direct transcription on a grid") {
  for (int k = -6; k <= 6; ++k)
    for (int l = -6; l <= 6; ++l) {
      if (k == 0 || l == 0 || k == l) continue;
      KnotClass a, b;
      a.kind = b.kind = KnotClass::DoubleTwist;
      a.k = k, a.l = l, b.k = l, b.l = k;
      for (int r = -61; r <= 61; r += 2) {
        CHECK(theorem_range(a, r) == oracle_double_twist(k, l, r));
        CHECK(theorem_range(a, r) == theorem_range(b, r));
      }
    }
  for (int m = -20; m <= 20; ++m) {
    if (std::abs(m) <= 1 || m % 3 == 0) continue;
    KnotClass p;
    p.kind = KnotClass::Pretzel;
    p.m = m;
    for (int r = -301; r <= 301; r += 2) CHECK(theorem_range(p, r) == oracle_pretzel(m, r));
  }
}
