#include <doctest.h>

#include "ajc/errors.hpp"
#include "ajc/jones.hpp"
#include "ajc/json_io.hpp"
#include "helpers.hpp"

using namespace ajc;
using namespace ajc::test;

namespace {
TorusOp mono(int te, int me, int l, long c = 1) { return TorusOp::term(TM(te, me, c), l); }
}  // namespace

TEST_CASE("qtorus: commutation rule") {
  CHECK(TorusOp::L() * TorusOp::M() == mono(2, 1, 1));
  CHECK(top_mul(TorusOp::L(), TorusOp::M()) == mono(2, 1, 1));
  CHECK(mono(0, 1, 1) * mono(0, 1, 1) == mono(2, 2, 2));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 30; ++i) {
    const TorusOp x = random_op(rng, 3, 3, -1);
    CHECK(TorusOp(1) * x == x);
    CHECK(x * TorusOp(1) == x);
  }
}

TEST_CASE("qtorus: associativity on random triples") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 40; ++i) {
    const TorusOp a = random_op(rng, 3, 3), b = random_op(rng, 3, 3), c = random_op(rng, 3, 3, -2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("qtorus: action on sequences") {
  const JonesSeq u = unknot_seq();
  CHECK(apply(TorusOp::L(), u, 1) == T(2) + T(-2));
  auto delta3 = [](long n) { return n == 3 ? LaurentT(1) : LaurentT(); };
  CHECK(apply(TorusOp::M(), delta3, 3) == T(6));
  const TorusOp rel = TorusOp::L() * TorusOp::M() - mono(2, 1, 1);
  const JonesSeq tref = torus_seq(2, 3);
  for (long n = -3; n <= 5; ++n) CHECK(apply(rel, tref, n).is_zero());

  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    const TorusOp a = random_op(rng, 2, 2), b = random_op(rng, 2, 2);
    auto bf = [&](long m) { return apply(b, tref, m); };
    for (long n = 1; n <= 3; ++n) CHECK(apply(a * b, tref, n) == apply(a, bf, n));
  }
}

TEST_CASE("qtorus: sigma and the peripheral basis") {
  CHECK(sigma(mono(0, 2, 3)) == mono(0, -2, -3));
  CHECK(fg_basis(1, 0) == TorusOp::M() * TorusOp(-1) + mono(0, -1, 0, -1));
  CHECK(fg_basis(0, 1) == mono(0, 0, 1, -1) + mono(0, 0, -1, -1));
  CHECK(fg_basis(1, 1) == mono(1, 1, 1) + mono(1, -1, -1));
  CHECK_THROWS_AS(fg_basis(2, 4), InvalidInput);
  std::mt19937_64 rng(29);
  for (int i = 0; i < 30; ++i) {
    const TorusOp x = random_op(rng, 2, 3, -2);
    CHECK(sigma(sigma(x)) == x);
  }
  for (int k = -3; k <= 3; ++k)
    for (int l = -3; l <= 3; ++l)
      if (std::gcd(k, l) == 1) CHECK(sigma(fg_basis(k, l)) == fg_basis(k, l));
}

TEST_CASE("qtorus: even subring and the substitution pair") {
  {
    auto [a, b] = even_substitute(EvenOp::term(PolyTM(1), 1));
    CHECK(a == TorusOp::L(2));
    CHECK(b == TorusOp::L());
  }
  {
    auto [a, b] = even_substitute(EvenOp::term(TM(0, 1), 0));
    CHECK(a == TorusOp::M());
    CHECK(b == mono(2, 2, 0));
  }
  {
    auto [a, b] = even_substitute(EvenOp::term(PolyTM(1), 1) + EvenOp::term(TM(0, 2), -1));
    CHECK(a == TorusOp::L(2) + mono(0, 2, -2));
    CHECK(b == TorusOp::L() + mono(4, 4, -1));
  }
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    EvenOp p, q;
    for (int k = 0; k <= 2; ++k) {
      p.add_term(random_polytm(rng), k);
      q.add_term(random_polytm(rng), k - 1);
    }
    CHECK(embed_even(p * q) == embed_even(p) * embed_even(q));
  }
}

TEST_CASE("qtorus: odd-color substitution identity on unknot and trefoil") {
  std::mt19937_64 rng(37);
  for (const JonesSeq& j : {unknot_seq(), torus_seq(2, 3)}) {
    const JonesSeq odd = odd_part(j);
    for (int i = 0; i < 10; ++i) {
      EvenOp p;
      for (int k = 0; k <= 2; ++k) p.add_term(random_polytm(rng, 4, 3), k);
      auto [even_form, odd_form] = even_substitute(p);
      for (long n = 0; n <= 5; ++n) CHECK(apply(even_form, j, 2 * n + 1) == apply(odd_form, odd, n));
    }
  }
}

TEST_CASE("qtorus: JSON round trip") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 20; ++i) {
    const TorusOp x = random_op(rng, 3, 3, -1);
    CHECK(jsonio::torus_from_json(jsonio::to_json(x)) == x);
  }
}
