#include <algorithm>
#include <map>
#include <numeric>

#include "ajc/errors.hpp"
#include "ajc/linalg.hpp"
#include "ajc/modp.hpp"
#include "guess_internal.hpp"

namespace ajc::detail {

namespace {

using modp::u64;

// Below 2^26 so elimination can delay reductions.
constexpr u64 kWindowPrime = 67108859;

struct Column {
  int k, j, i;
};

// Ordered by (j, i, k): the first kernel vector is then the lowest monomial shift of the
// annihilator, which has the smallest support among the shifts that fit the box.
std::vector<Column> columns(const Lattice& lat, int d, int deg_m, int w) {
  std::vector<Column> cols;
  for (int j = 0; j <= deg_m; j += lat.h())
    for (int i = -w; i <= w; ++i)
      for (int k = 0; k <= d; ++k)
        if (((i - lat.rho(k)) % lat.g + lat.g) % lat.g == 0) cols.push_back({k, j, i});
  return cols;
}

// Range of t-exponents the equation at color n can reach, in steps of g.
std::pair<long, long> equation_span(const std::vector<LaurentT>& values, long n_lo, long n, int d, int deg_m, int w,
                                    int g) {
  long lo = 0, hi = 0;
  bool any = false;
  for (int k = 0; k <= d; ++k) {
    const LaurentT& v = values[static_cast<std::size_t>(n + k - n_lo)];
    if (v.is_zero()) continue;
    long a = v.min_exp() - w, b = v.max_exp() + w + 2L * std::max(0L, n) * deg_m;
    if (n < 0) a += 2L * n * deg_m;
    if (!any || a < lo) lo = a;
    if (!any || b > hi) hi = b;
    any = true;
  }
  if (!any) return {0, -1};
  return {lo, lo + (hi - lo) / g * g};
}

}  // namespace

Lattice detect_lattice(const std::vector<LaurentT>& values) {
  long g0 = 0;
  for (const auto& v : values)
    for (const auto& [e, c] : v.terms()) g0 = std::gcd(g0, static_cast<long>(e - v.min_exp()));
  if (g0 == 0) return {};
  for (long g = g0; g >= 1; --g) {
    if (g0 % g != 0) continue;
    for (long e1 = 0; e1 < g; ++e1) {
      bool ok = true;
      long base = -1;
      for (std::size_t n = 0; n < values.size() && ok; ++n) {
        if (values[n].is_zero()) continue;
        long r = ((values[n].min_exp() - e1 * static_cast<long>(n)) % g + g) % g;
        if (base < 0) base = r;
        ok = r == base;
      }
      if (ok) return {static_cast<int>(g), static_cast<int>(e1)};
    }
  }
  return {};
}

WindowPlan window_plan(const std::vector<LaurentT>& values, long n_lo, const Lattice& lat, int d, int deg_m,
                       int half_width) {
  WindowPlan plan;
  plan.unknowns = columns(lat, d, deg_m, half_width).size();
  const long n_hi = n_lo + static_cast<long>(values.size()) - 1;
  for (long n = n_lo; n + d <= n_hi; ++n) {
    auto [lo, hi] = equation_span(values, n_lo, n, d, deg_m, half_width, lat.g);
    if (hi >= lo) plan.equations += static_cast<std::size_t>((hi - lo) / lat.g + 1);
  }
  return plan;
}

namespace {

// Exact integer nullspace of the equations restricted to the given columns.
std::vector<std::vector<Int>> exact_nullspace(const std::vector<LaurentT>& values, long n_lo,
                                              const std::vector<Column>& cols, int d) {
  const long n_hi = n_lo + static_cast<long>(values.size()) - 1;
  std::vector<std::vector<Int>> rows;
  for (long n = n_lo; n + d <= n_hi; ++n) {
    std::map<long, std::vector<Int>> eq;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const LaurentT& v = values[static_cast<std::size_t>(n + cols[c].k - n_lo)];
      long shift = cols[c].i + 2L * n * cols[c].j;
      for (const auto& [e, coef] : v.terms()) {
        auto& row = eq[e + shift];
        if (row.empty()) row.resize(cols.size());
        row[c] += coef;
      }
    }
    for (auto& [e, row] : eq)
      if (std::any_of(row.begin(), row.end(), [](const Int& x) { return x != 0; })) rows.push_back(std::move(row));
  }
  return linalg::bareiss_nullspace(std::move(rows), cols.size());
}

std::optional<TorusOp> solve_width(const std::vector<LaurentT>& values, long n_lo, const Lattice& lat, int d,
                                   int deg_m, int w, modp::Rng& rng) {
  const auto cols = columns(lat, d, deg_m, w);
  const long n_hi = n_lo + static_cast<long>(values.size()) - 1;
  const u64 p = kWindowPrime;

  // Row capacity per color: one row per reachable coefficient position.
  std::vector<long> cap;
  std::size_t total = 0;
  for (long n = n_lo; n + d <= n_hi; ++n) {
    auto [lo, hi] = equation_span(values, n_lo, n, d, deg_m, w, lat.g);
    long c = hi >= lo ? (hi - lo) / lat.g + 1 : 0;
    cap.push_back(c);
    total += static_cast<std::size_t>(c);
  }
  std::size_t budget = std::min(total, cols.size() + 64);

  while (true) {
    // Distribute rows round-robin over the colors.
    std::vector<long> take(cap.size(), 0);
    std::size_t placed = 0;
    while (placed < budget) {
      bool progress = false;
      for (std::size_t a = 0; a < cap.size() && placed < budget; ++a)
        if (take[a] < cap[a]) {
          ++take[a];
          ++placed;
          progress = true;
        }
      if (!progress) break;
    }
    linalg::ModMatrix m(placed, cols.size(), p);
    std::size_t row = 0;
    for (std::size_t a = 0; a < cap.size(); ++a) {
      const long n = n_lo + static_cast<long>(a);
      for (long s = 0; s < take[a]; ++s) {
        const u64 tau = 2 + rng.below(p - 3);
        std::vector<u64> vk(static_cast<std::size_t>(d + 1));
        for (int k = 0; k <= d; ++k) vk[static_cast<std::size_t>(k)] = values[static_cast<std::size_t>(n + k - n_lo)].eval_mod(tau, p);
        const u64 step = modp::pow(tau, 2 * n, p);
        std::vector<u64> pw_i(static_cast<std::size_t>(2 * w + 1)), pw_j(static_cast<std::size_t>(deg_m + 1));
        pw_i[0] = modp::pow(tau, -w, p);
        for (std::size_t x = 1; x < pw_i.size(); ++x) pw_i[x] = modp::mul(pw_i[x - 1], tau, p);
        pw_j[0] = 1;
        for (std::size_t x = 1; x < pw_j.size(); ++x) pw_j[x] = modp::mul(pw_j[x - 1], step, p);
        u64* r = m.row(row++);
        for (std::size_t c = 0; c < cols.size(); ++c) {
          u64 x = modp::mul(pw_i[static_cast<std::size_t>(cols[c].i + w)], pw_j[static_cast<std::size_t>(cols[c].j)], p);
          r[c] = modp::mul(x, vk[static_cast<std::size_t>(cols[c].k)], p);
        }
      }
    }
    auto ker = linalg::kernel(std::move(m), 1);
    // An empty kernel modulo p rules out integer solutions: the rows are images of exact equations.
    if (ker.empty()) return std::nullopt;
    std::vector<Column> support;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (ker[0][c] != 0) support.push_back(cols[c]);
    auto null = exact_nullspace(values, n_lo, support, d);
    if (!null.empty()) {
      // Smallest support among the exact solutions.
      auto best = std::min_element(null.begin(), null.end(), [](const auto& a, const auto& b) {
        auto nz = [](const std::vector<Int>& v) { return std::count_if(v.begin(), v.end(), [](const Int& x) { return x != 0; }); };
        return nz(a) < nz(b);
      });
      TorusOp op;
      for (std::size_t c = 0; c < support.size(); ++c)
        op.add_term(PolyTM::monomial((*best)[c], support[c].i, support[c].j), support[c].k);
      return op;
    }
    if (budget >= total) return std::nullopt;
    budget = std::min(total, budget * 2);
  }
}

}  // namespace

std::optional<TorusOp> guess_window(const std::vector<LaurentT>& values, long n_lo, const Lattice& lat, int d,
                                    int deg_m, int deg_t, std::uint64_t seed, int* used_width) {
  modp::Rng rng(seed);
  std::vector<int> widths;
  for (int w = 8; w < deg_t; w *= 2) widths.push_back(w);
  widths.push_back(deg_t);
  for (int w : widths) {
    auto plan = window_plan(values, n_lo, lat, d, deg_m, w);
    if (plan.equations < plan.unknowns + 8)
      throw InsufficientData("recurrence guess: " + std::to_string(plan.equations) + " scalar equations for " +
                             std::to_string(plan.unknowns) + " unknowns; supply more colors");
    if (auto op = solve_width(values, n_lo, lat, d, deg_m, w, rng)) {
      if (used_width) *used_width = w;
      return op;
    }
  }
  return std::nullopt;
}

}  // namespace ajc::detail
