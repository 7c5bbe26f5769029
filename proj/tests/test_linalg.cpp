#include <doctest.h>

#include "ajc/linalg.hpp"
#include "ajc/modp.hpp"
#include "helpers.hpp"

using namespace ajc;
using namespace ajc::linalg;

namespace {

std::vector<std::vector<Int>> int_rows(const std::vector<std::vector<long>>& r) {
  std::vector<std::vector<Int>> out;
  for (const auto& row : r) {
    std::vector<Int> v;
    for (long x : row) v.emplace_back(x);
    out.push_back(v);
  }
  return out;
}

bool annihilates(const std::vector<std::vector<Int>>& rows, const std::vector<Int>& v) {
  for (const auto& row : rows) {
    Int s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += row[j] * v[j];
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("linalg: Bareiss nullspace") {
  const auto rows = int_rows({{1, 2, 3}, {4, 5, 6}});
  const auto ns = bareiss_nullspace(rows, 3);
  REQUIRE(ns.size() == 1);
  CHECK(annihilates(rows, ns[0]));
  CHECK(((ns[0] == std::vector<Int>{1, -2, 1}) || (ns[0] == std::vector<Int>{-1, 2, -1})));
  CHECK(bareiss_rank(rows, 3) == 2);
  CHECK(bareiss_nullspace(int_rows({{1, 0}, {0, 1}}), 2).empty());
  CHECK(bareiss_nullspace({}, 2).size() == 2);
}

TEST_CASE("linalg: random exact nullspaces") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<long> c(-9, 9);
  std::uniform_int_distribution<int> dim(1, 7);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows_n = dim(rng), cols = dim(rng) + 1;
    std::vector<std::vector<long>> r(static_cast<std::size_t>(rows_n), std::vector<long>(static_cast<std::size_t>(cols)));
    for (auto& row : r)
      for (auto& x : row) x = c(rng);
    // duplicate a combination of rows to force dependence
    if (rows_n >= 2) {
      std::vector<long> comb(static_cast<std::size_t>(cols));
      for (int j = 0; j < cols; ++j) comb[static_cast<std::size_t>(j)] = 3 * r[0][static_cast<std::size_t>(j)] - 2 * r[1][static_cast<std::size_t>(j)];
      r.push_back(comb);
    }
    const auto rows = int_rows(r);
    const auto ns = bareiss_nullspace(rows, static_cast<std::size_t>(cols));
    const std::size_t rank = bareiss_rank(rows, static_cast<std::size_t>(cols));
    CHECK(ns.size() + rank == static_cast<std::size_t>(cols));
    for (const auto& v : ns) {
      CHECK(annihilates(rows, v));
      Int g = 0;
      for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      CHECK(g == 1);
    }
    // the modular kernel has the same dimension for a large prime
    const u64 p = 67108859;
    ModMatrix m(rows.size(), static_cast<std::size_t>(cols), p);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < static_cast<std::size_t>(cols); ++j) m.at(i, j) = modp::reduce(rows[i][j], p);
    std::size_t dimk = 0;
    const auto kv = kernel(m, SIZE_MAX, &dimk);
    CHECK(dimk == ns.size());
    for (const auto& v : kv)
      for (std::size_t i = 0; i < rows.size(); ++i) {
        u64 s = 0;
        for (std::size_t j = 0; j < v.size(); ++j) s = modp::add(s, modp::mul(m.at(i, j), v[j], p), p);
        CHECK(s == 0);
      }
  }
}

TEST_CASE("linalg: kernel vectors come ordered by their last column") {
  const u64 p = 2305843009213693951ULL;
  // x0 + x1 = 0 and x2, x3 free: first vector uses columns {0, 1} only.
  ModMatrix m(1, 4, p);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  std::size_t d = 0;
  const auto k = kernel(m, SIZE_MAX, &d);
  CHECK(d == 3);
  REQUIRE(k.size() == 3);
  CHECK(k[0][2] == 0);
  CHECK(k[0][3] == 0);
  CHECK(kernel(m, 1).size() == 1);
}
