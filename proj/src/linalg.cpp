#include "ajc/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "ajc/modp.hpp"

namespace ajc::linalg {

namespace {

constexpr u64 kLazyBound = 1ULL << 26;
// (2^26)^2 * 4000 < 2^64
constexpr unsigned kLazySteps = 4000;

}  // namespace

std::vector<std::size_t> echelon(ModMatrix& m) {
  const u64 p = m.p;
  const bool lazy = p < kLazyBound;
  std::vector<unsigned> pending(m.rows, 0);
  auto reduce_row = [&](std::size_t i, std::size_t from) {
    u64* ri = m.row(i);
    for (std::size_t j = from; j < m.cols; ++j) ri[j] %= p;
    pending[i] = 0;
  };
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = m.rows;
    for (std::size_t i = r; i < m.rows; ++i) {
      if (lazy) m.at(i, c) %= p;
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv == m.rows) continue;
    if (piv != r) {
      std::swap_ranges(m.row(piv) + c, m.row(piv) + m.cols, m.row(r) + c);
      std::swap(pending[piv], pending[r]);
    }
    if (lazy) reduce_row(r, c);
    u64* pr = m.row(r);
    const u64 iv = modp::inv(pr[c], p);
    for (std::size_t j = c; j < m.cols; ++j)
      if (pr[j]) pr[j] = lazy ? pr[j] * iv % p : modp::mul(pr[j], iv, p);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      u64* ri = m.row(i);
      const u64 f = lazy ? ri[c] % p : ri[c];
      ri[c] = 0;
      if (f == 0) continue;
      const u64 nf = p - f;
      if (lazy) {
        if (++pending[i] >= kLazySteps) reduce_row(i, c + 1);
        for (std::size_t j = c + 1; j < m.cols; ++j) ri[j] += nf * pr[j];
      } else {
        for (std::size_t j = c + 1; j < m.cols; ++j)
          if (pr[j]) ri[j] = modp::add(ri[j], modp::mul(nf, pr[j], p), p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  if (lazy)
    for (std::size_t i = 0; i < m.rows; ++i) reduce_row(i, 0);
  return pivots;
}

std::vector<std::vector<u64>> kernel(ModMatrix m, std::size_t max_vectors, std::size_t* dim) {
  auto pivots = echelon(m);
  const u64 p = m.p;
  std::vector<char> is_pivot(m.cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  if (dim) *dim = m.cols - pivots.size();
  std::vector<std::vector<u64>> out;
  for (std::size_t f = 0; f < m.cols && out.size() < max_vectors; ++f) {
    if (is_pivot[f]) continue;
    std::vector<u64> v(m.cols, 0);
    v[f] = 1;
    // Pivot rows are monic; solve upward from the last pivot left of f.
    std::size_t r = 0;
    while (r < pivots.size() && pivots[r] < f) ++r;
    while (r-- > 0) {
      const u64* row = m.row(r);
      u64 s = 0;
      for (std::size_t j = pivots[r] + 1; j <= f; ++j)
        if (row[j] && v[j]) s = modp::add(s, modp::mul(row[j], v[j], p), p);
      v[pivots[r]] = s ? p - s : 0;
    }
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

// Fraction-free echelon form; returns pivot columns. Entries of the last pivot row equal the
// corresponding minors, so all divisions are exact.
std::vector<std::size_t> bareiss(std::vector<std::vector<Int>>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t bareiss_rank(std::vector<std::vector<Int>> rows, std::size_t cols) {
  return bareiss(rows, cols).size();
}

std::vector<std::vector<Int>> bareiss_nullspace(std::vector<std::vector<Int>> rows, std::size_t cols) {
  for (auto& r : rows) r.resize(cols);
  auto pivots = bareiss(rows, cols);
  const std::size_t rank = pivots.size();
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<Int>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    // Back substitution with a common denominator: x_f = D, then solve the triangular system.
    std::vector<Rat> x(cols, 0);
    x[f] = 1;
    for (std::size_t k = rank; k-- > 0;) {
      const auto& row = rows[k];
      Rat s = 0;
      for (std::size_t j = pivots[k] + 1; j < cols; ++j)
        if (row[j] != 0 && x[j] != 0) s += Rat(row[j]) * x[j];
      x[pivots[k]] = -s / Rat(row[pivots[k]]);
    }
    Int den = 1;
    for (const auto& v : x) den = lcm(den, Int(v.get_den()));
    std::vector<Int> iv(cols);
    Int g = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      Rat s = x[j] * den;
      iv[j] = s.get_num();
      g = gcd(g, iv[j]);
    }
    if (g != 0 && g != 1)
      for (auto& v : iv) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    out.push_back(std::move(iv));
  }
  return out;
}

}  // namespace ajc::linalg
