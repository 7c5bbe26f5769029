#include <doctest.h>

#include <functional>
#include <numeric>

#include "ajc/degrees.hpp"
#include "ajc/errors.hpp"
#include "helpers.hpp"

using namespace ajc;
using namespace ajc::test;

namespace {

std::vector<std::pair<long, DegQ>> synth(const std::function<Rat(long)>& f, long lo, long hi) {
  std::vector<std::pair<long, DegQ>> out;
  for (long n = lo; n <= hi; ++n) out.emplace_back(n, DegQ(f(n)));
  return out;
}

QuasiPoly constant(const Rat& a, const Rat& b, const Rat& c) {
  QuasiPoly q;
  q.a = {a}, q.b = {b}, q.c = {c};
  return q;
}

// Expected per-residue coefficients of a pretzel degree formula, from the closed form.
struct Expected {
  int period;
  std::vector<Rat> a, b, c;
};

Expected pretzel_expected(int m, int eps, const std::vector<Rat>& rs) {
  const int rp = static_cast<int>(rs.empty() ? 1 : rs.size());
  auto r2 = [&](long k) {
    if (rs.empty()) return Rat(0);
    const Rat v = rs[static_cast<std::size_t>(((k % rp) + rp) % rp)];
    return Rat(v * v);
  };
  Expected e;
  if (m >= 2 && eps < 0) {
    e.period = 1;
    e.a = {0}, e.b = {frac(2 * m + 5, 2)}, e.c = {frac(-(2 * m + 5), 2)};
  } else if (m >= 2) {
    e.period = rp;
    for (int i = 0; i < rp; ++i) {
      e.a.push_back(frac(5, 2) + m + frac(1, 4 * m));
      e.b.push_back(frac(1, 2 * m) - frac(1, 2));
      e.c.push_back(-(3 + frac(3 * m, 4) - frac(1, 4 * m)) - m * r2(i - 1));
    }
  } else if (eps > 0) {
    e.period = 1;
    e.a = {frac(5, 2)}, e.b = {Rat(1 + m)}, e.c = {-(frac(7, 2) + m)};
  } else {
    const int k = std::abs(2 * m + 3);
    e.period = std::lcm(k, rp);
    for (int i = 0; i < e.period; ++i) {
      e.a.push_back(frac(2 * (m + 2) * (m + 2), 2 * m + 3));
      e.b.push_back(i % k != 0 ? frac(1, 2) : frac(2 * m + 1, 2 * (2 * m + 3)));
      e.c.push_back(-frac(6 * m + 17, 8) - (m + frac(3, 2)) * r2(i - 1));
    }
  }
  for (auto* v : {&e.a, &e.b, &e.c})
    for (auto& x : *v) x.canonicalize();
  return e;
}

}  // namespace

TEST_CASE("degrees: fitting") {
  const QuasiPoly u = fit_quasi(degree_samples(unknot_seq(), 1, 20, 1), 4);
  CHECK(u.period == 1);
  CHECK(u.a[0] == 0);
  CHECK(u.b[0] == frac(1, 2));
  CHECK(u.c[0] == frac(-1, 2));

  const QuasiPoly sq = fit_quasi(synth([](long n) { return Rat(n * n); }, 1, 20), 4);
  CHECK(sq.period == 1);
  CHECK(sq.a[0] == 1);
  CHECK(sq.b[0] == 0);
  CHECK(sq.c[0] == 0);

  const QuasiPoly k2 = fit_quasi(synth([](long n) { return pretzel_degree(2, n, -1, {}).value(); }, 1, 20), 4);
  CHECK(k2.period == 1);
  CHECK(k2.a[0] == 0);
  CHECK(k2.b[0] == frac(9, 2));
  CHECK(k2.c[0] == frac(-9, 2));
}

TEST_CASE("degrees: fitting errors and thresholds") {
  CHECK_THROWS_AS(fit_quasi(synth([](long n) { return Rat(n); }, 1, 10), 4), InsufficientData);
  // n^3 is not eventually quasi-quadratic.
  CHECK_THROWS_AS(fit_quasi(synth([](long n) { return Rat(n * n * n); }, 1, 30), 4), NoFit);
  // A sequence that only becomes quadratic at n = 6.
  const QuasiPoly q = fit_quasi(synth([](long n) { return n < 6 ? Rat(100 + n) : frac(n * n, 4); }, 1, 30), 2);
  CHECK(q.period == 1);
  CHECK(q.N == 6);
  CHECK(q.a[0] == frac(1, 4));
}

TEST_CASE("degrees: fit recovers random quasi-polynomials") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 8), per(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    QuasiPoly q;
    q.period = per(rng);
    for (int i = 0; i < q.period; ++i) {
      for (auto* v : {&q.a, &q.b, &q.c}) {
        Rat x(num(rng), den(rng));
        x.canonicalize();
        v->push_back(x);
      }
    }
    const QuasiPoly f = fit_quasi(synth([&](long n) { return q.value(n); }, 1, 40), 4);
    // The fit finds the least period, which divides the generating one.
    CHECK(q.period % f.period == 0);
    for (long n = 1; n <= 60; ++n) CHECK(f.value(n) == q.value(n));
    CHECK(f.N == 1);
  }
}

TEST_CASE("degrees: pretzel closed forms") {
  CHECK(pretzel_degree(2, 3, -1, {}) == DegQ(9));
  CHECK(pretzel_degree(-3, 2, 1, {}) == DegQ(frac(11, 2)));
  CHECK(pretzel_degree(2, 1, -1, {}) == DegQ(0));
  CHECK_THROWS_AS(pretzel_degree(1, 3, 1, {}), InvalidInput);
  CHECK_THROWS_AS(pretzel_degree(0, 3, 1, {}), InvalidInput);
  CHECK_THROWS_AS(pretzel_degree(2, 3, 1, {}), InvalidInput);  // needs r_n
}

TEST_CASE("degrees: pretzel fits and slope bounds") {
  struct Case {
    int m;
    std::vector<Rat> rs;
  };
  const std::vector<Case> cases = {
      {2, {Rat(0), frac(1, 2)}}, {3, {frac(1, 2), Rat(0), frac(-1, 2)}}, {-3, {frac(1, 2), Rat(0), Rat(0)}}, {-4, {frac(1, 2)}}};
  for (const auto& cs : cases) {
    CAPTURE(cs.m);
    SlopeData sd;
    for (int eps : {1, -1}) {
      const auto samples = synth([&](long n) { return pretzel_degree(cs.m, n, eps, cs.rs).value(); }, 1, 48);
      const QuasiPoly f = fit_quasi(samples, 6);
      const Expected e = pretzel_expected(cs.m, eps, cs.rs);
      CHECK(f.period == e.period);
      CHECK(f.a == e.a);
      CHECK(f.b == e.b);
      CHECK(f.c == e.c);
      (eps > 0 ? sd.plus : sd.minus) = f;
    }
    const Rat rp = r_invariants(sd.plus, 1).r, rm = r_invariants(sd.minus, -1).r;
    if (cs.m >= 2) {
      CHECK(rm == 0);
      CHECK(rp <= frac(33 * cs.m, 4) + frac(3, cs.m) + 19);
    } else {
      CHECK(rp == 20);
      CHECK(rm <= frac(33 * cs.m, 4) + frac(6, 2 * cs.m + 3) + frac(171, 8));
    }
  }
}

TEST_CASE("degrees: r-invariants") {
  const RInvariants a = r_invariants(constant(frac(3, 2), Rat(-1), Rat(2)), 1);
  CHECK(a.delta1 == 0);
  CHECK(a.delta2 == -2);
  CHECK(a.r == 12);
  const RInvariants b = r_invariants(constant(Rat(1), frac(1, 2), Rat(0)), 1);
  CHECK(b.r == 9);
  QuasiPoly periodic;
  periodic.period = 2;
  periodic.a = {1, 2}, periodic.b = {0, 0}, periodic.c = {0, 0};
  CHECK_THROWS_AS(r_invariants(periodic, 1), InvalidInput);
}

TEST_CASE("degrees: adequate knots have slopes 4c+ and -4c-") {
  struct Case {
    JonesSeq j;
    int cp, cm;
  };
  for (const auto& cs : {Case{torus_seq(2, 3), 3, 0}, Case{twist_seq(-1), 2, 2}, Case{twist_seq(2), 5, 0},
                         Case{twist_seq(-2), 2, 4}}) {
    const SlopeData sd = slope_data(cs.j, 1, 24, 4);
    CHECK(membership_K(sd));
    CHECK(r_invariants(sd.plus, 1).r == 4 * cs.cp);
    CHECK(r_invariants(sd.minus, -1).r == -4 * cs.cm);
  }
  CHECK_FALSE(membership_K(slope_data(unknot_seq(), 1, 24, 4)));
  SlopeData periodic;
  periodic.plus.period = 2;
  periodic.plus.a = {1, 2}, periodic.plus.b = {0, 0}, periodic.plus.c = {0, 0};
  periodic.minus = constant(0, 1, 0);
  CHECK_FALSE(membership_K(periodic));
}

TEST_CASE("degrees: cable degree law beyond the slopes") {
  // trefoil: r+ = 12, r- = 0; figure-8: r+ = 8, r- = -8
  struct Case {
    JonesSeq j;
    int r;
    int eps;
  };
  for (const auto& cs : {Case{torus_seq(2, 3), 13, 1}, Case{torus_seq(2, 3), -1, -1}, Case{twist_seq(-1), 9, 1},
                         Case{twist_seq(-1), -9, -1}}) {
    const JonesSeq c = cable_jones(cs.j, cs.r);
    for (long n = 3; n <= 8; ++n) {
      const LaurentT v = c(n);
      CHECK((cs.eps > 0 ? d_plus(v) : d_minus(v)).value() == frac(cs.r * (n * n - 1), 2));
    }
  }
}
