#include <doctest.h>

#include <set>

#include "ajc/apoly.hpp"
#include "ajc/errors.hpp"
#include "ajc/knot_table.hpp"
#include "helpers.hpp"

using namespace ajc;
using namespace ajc::test;

namespace {

CommPoly L(int k = 1) { return CommPoly::L(k); }
CommPoly M(int k = 1) { return CommPoly::M(k); }

CommPoly db(const std::string& name) { return *find_knot(bundled_table(), name).apoly; }

LambdaPoly lam(const std::vector<CommPoly>& c) { return c; }

}  // namespace

TEST_CASE("apoly: resultants") {
  // Res(lambda + M^12, lambda^2 - L) = M^24 - L
  CHECK(resultant(lam({M(12), 1}), lam({-L(), 0, 1})) == M(24) - L());
  CHECK(resultant(lam({-L(), 0, 1}), lam({-L(), 0, 1})).is_zero());
  CHECK(resultant_sylvester(lam({-L(), 0, 1}), lam({-L(), 0, 1})).is_zero());
  CHECK_THROWS_AS(resultant(lam({}), lam({1, 1})), InvalidInput);
}

TEST_CASE("apoly: subresultant and Sylvester resultants agree") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> deg(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    LambdaPoly p, q, s;
    for (int i = 0, d = deg(rng); i <= d; ++i) p.push_back(random_comm(rng, 2, 2, 2));
    for (int i = 0, d = deg(rng); i <= d; ++i) q.push_back(random_comm(rng, 2, 2, 2));
    for (int i = 0, d = deg(rng); i <= d; ++i) s.push_back(random_comm(rng, 1, 2, 2));
    p.back() += 1;
    q.back() += 1;
    s.back() += 1;
    CHECK(resultant(p, q) == resultant_sylvester(p, q));
    // multiplicativity in the first argument
    LambdaPoly pq(p.size() + s.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j) pq[i + j] += p[i] * s[j];
    CHECK(resultant(pq, q) == resultant(p, q) * resultant(s, q));
  }
}

TEST_CASE("apoly: R, B and C polynomials") {
  CHECK(r_poly(L() - 1) == CommPoly(1) - L());
  for (const std::string k : {"trefoil", "figure-8", "5_2", "T(2,5)"}) {
    const CommPoly a = db(k);
    CHECK(r_poly(a).max_l() == a.max_l());
    const CommPoly sq = square_sub(a);
    CHECK(resultant(as_lambda(sq), lam({-L(), 0, 1})) == r_poly(sq));
  }
  const CommPoly f8 = db("figure-8");
  CHECK(r_poly(f8).max_l() == 2);
  CHECK(resultant(as_lambda(square_sub(f8)), lam({-L(), 0, 1})) ==
        resultant_sylvester(as_lambda(square_sub(f8)), lam({-L(), 0, 1})));
  CHECK(b_poly(CommPoly(1)) == L() - 1);
  CHECK(c_poly(CommPoly(1)) == L() - 1);
  CHECK(b_poly(db("trefoil")).max_l() == 2);
}

TEST_CASE("apoly: cable A-polynomial") {
  // (L - 1)(1 - L)(L + M^{-2}), cleared
  const CommPoly expect = ((L() - 1) * (CommPoly(1) - L()) * (L() * M(2) + 1)).normalized();
  CHECK(cable_a(L() - 1, 1).normalized() == expect);
  CHECK_THROWS_AS(cable_a(L() - 1, 2), InvalidInput);
  const CommPoly c = cable_a(db("trefoil"), 13);
  CHECK(c.max_l() == 3);
  CHECK(c.min_m() == 0);
}

TEST_CASE("apoly: symmetry and odd L-terms") {
  CHECK(even_m_symmetry(L() + M(2)));
  CHECK(square_sub(L() + M(2)) == L() + M(4));
  CHECK_FALSE(even_m_symmetry(L() + M()));
  CHECK(odd_L_term_exists(L() + M(6)));
  CHECK_FALSE(odd_L_term_exists(L(2) + M()));
  for (const auto& k : bundled_table()) {
    if (!k.apoly) continue;
    CAPTURE(k.name);
    CHECK(even_m_symmetry(*k.apoly));
    if (k.two_bridge) CHECK(odd_L_term_exists(*k.apoly));
  }
}

TEST_CASE("apoly: Newton polygons") {
  using V = std::vector<std::pair<int, int>>;
  const NewtonPolygon sq = newton_polygon(CommPoly(1) + L() + M() + L() * M());
  CHECK(sq.vertices == V{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const NewtonPolygon seg = newton_polygon(db("trefoil"));
  CHECK(seg.vertices.size() == 2);
  CHECK(seg.contains({1, 0}));
  CHECK(seg.contains({0, 6}));
  const NewtonPolygon hex = newton_polygon(db("5_2"));
  std::set<std::pair<int, int>> got(hex.vertices.begin(), hex.vertices.end());
  CHECK(got == std::set<std::pair<int, int>>{{0, 0}, {1, 0}, {2, 4}, {1, 10}, {2, 14}, {3, 14}});
  CHECK_THROWS_AS(newton_polygon(CommPoly()), InvalidInput);

  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    const CommPoly p = random_comm(rng, 5, 5, 8);
    if (p.is_zero()) continue;
    const NewtonPolygon h = newton_polygon(p);
    for (const auto& [k, c] : p.terms()) CHECK(h.contains(k));
    const auto& v = h.vertices;
    if (v.size() >= 3)
      for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        const auto& c = v[(i + 2) % v.size()];
        const long cross = static_cast<long>(b.first - a.first) * (c.second - a.second) -
                           static_cast<long>(b.second - a.second) * (c.first - a.first);
        CHECK(cross > 0);
      }
  }
}

TEST_CASE("apoly: exact division and units") {
  const CommPoly a = (L() - 1) * (L() + M(6));
  CommPoly q;
  CHECK(comm_divide(a, L() - 1, q));
  CHECK(q == L() + M(6));
  CHECK_FALSE(comm_divide(a, L() + 2, q));
  const CommPoly u = (L(2) * M(-3) + M(-1)).cleared();
  CHECK(u.unit_l == 0);
  CHECK(u.unit_m == -3);
  CHECK(u == L(2) + M(2));
  CHECK(gcd_m(M(2) - 1, M() - 1) == M() - 1);
}
