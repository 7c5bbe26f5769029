#include <doctest.h>

#include "ajc/errors.hpp"
#include "ajc/jones.hpp"
#include "ajc/json_io.hpp"
#include "helpers.hpp"

using namespace ajc;
using namespace ajc::test;

TEST_CASE("laurent: ring operations and canonical form") {
  CHECK(lt_add(T(2) + T(-2), -T(2)) == T(-2));
  CHECK(lt_mul(T(1) - T(-1), T(1) + T(-1)) == T(2) - T(-2));
  CHECK(lt_neg(T(3, 2)) == T(3, -2));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const LaurentT f = random_laurent(rng);
    CHECK(lt_mul(f, LaurentT()).is_zero());
    CHECK((f - f).is_zero());
    for (const auto& [e, c] : f.terms()) CHECK(c != 0);
  }
}

TEST_CASE("laurent: ring axioms on random triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const LaurentT a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    const PolyTM p = random_polytm(rng), q = random_polytm(rng), s = random_polytm(rng);
    CHECK((p * q) * s == p * (q * s));
    CHECK(p * (q + s) == p * q + p * s);
    CHECK(p * q == q * p);
  }
}

TEST_CASE("laurent: degree functionals") {
  CHECK(d_plus(T(-8)) == DegQ(2));
  CHECK(d_minus(T(-8)) == DegQ(2));
  for (long n = 1; n <= 8; ++n) {
    CHECK(d_plus(jones_unknot(n)) == DegQ(frac(n - 1, 2)));
    CHECK(d_minus(jones_unknot(n)) == DegQ(frac(-(n - 1), 2)));
  }
  CHECK_THROWS_AS(d_plus(LaurentT()), DegreeUndefined);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const LaurentT f = random_laurent(rng), g = random_laurent(rng);
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(d_plus(f * g).value() == d_plus(f).value() + d_plus(g).value());
    CHECK(d_minus(f * g).value() == d_minus(f).value() + d_minus(g).value());
    CHECK(d_plus(f) >= d_minus(f));
  }
}

TEST_CASE("laurent: content normalization") {
  auto out = content_normalize({TM(2, 1, 2), TM(4, 2, 4)});
  CHECK(out[0] == PolyTM(1));
  CHECK(out[1] == TM(2, 1, 2));
  const PolyTM a = TM(0, 1) - PolyTM(1), b = TM(0, 1) + PolyTM(1);
  out = content_normalize({a, b});
  CHECK(out[0] == a);
  CHECK(out[1] == b);
  CHECK_THROWS_AS(content_normalize({PolyTM(), PolyTM()}), InvalidInput);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const PolyTM f = random_polytm(rng, 2, 2, 2);
    if (f.is_zero()) continue;
    const auto base = content_normalize({a * b, b});
    const auto scaled = content_normalize({f * a * b, f * b});
    CHECK(((scaled[0] == base[0] && scaled[1] == base[1]) || (scaled[0] == -base[0] && scaled[1] == -base[1])));
    CHECK(content_normalize(scaled) == scaled);
  }
}

TEST_CASE("laurent: JSON round trip is exact") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 30; ++i) {
    LaurentT f = random_laurent(rng);
    f = f * f * f * f * f * f * f * f;  // coefficients beyond 64 bits
    CHECK(jsonio::laurent_from_json(jsonio::to_json(f)) == f);
    const PolyTM p = random_polytm(rng);
    CHECK(jsonio::polytm_from_json(jsonio::to_json(p)) == p);
    const auto text = jsonio::to_json(f).dump();
    CHECK(jsonio::to_json(jsonio::laurent_from_json(jsonio::Json::parse(text))).dump() == text);
  }
  CHECK(jsonio::to_json(T(-2, 3) + T(5)).dump() == R"([[-2,"3"],[5,"1"]])");
}
