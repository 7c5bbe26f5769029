#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "ajc/laurent.hpp"

namespace ajc::linalg {

using u64 = std::uint64_t;

// Dense row-major matrix over F_p.
struct ModMatrix {
  std::size_t rows = 0, cols = 0;
  u64 p = 0;
  std::vector<u64> a;

  ModMatrix() = default;
  ModMatrix(std::size_t r, std::size_t c, u64 prime) : rows(r), cols(c), p(prime), a(r * c, 0) {}
  u64* row(std::size_t i) { return a.data() + i * cols; }
  const u64* row(std::size_t i) const { return a.data() + i * cols; }
  u64& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
};

// Row echelon form in place (forward elimination only); returns the pivot columns in increasing
// order, pivot row r holding pivot r. Primes below 2^26 use delayed reduction.
std::vector<std::size_t> echelon(ModMatrix& m);

// Kernel basis: one vector per free column f, with entry 1 at f and support in {f} and the pivot
// columns left of f. Vectors are ordered by f, so the first one has the smallest possible last
// nonzero column among all kernel elements. At most max_vectors are returned; dim gets the full
// kernel dimension.
std::vector<std::vector<u64>> kernel(ModMatrix m, std::size_t max_vectors = SIZE_MAX, std::size_t* dim = nullptr);

// Integer nullspace by fraction-free (Bareiss) elimination. Each basis vector is primitive.
std::vector<std::vector<Int>> bareiss_nullspace(std::vector<std::vector<Int>> rows, std::size_t cols);

// Rank over Q via Bareiss elimination.
std::size_t bareiss_rank(std::vector<std::vector<Int>> rows, std::size_t cols);

}  // namespace ajc::linalg
