#include "ajc/degrees.hpp"

#include <algorithm>
#include <numeric>

#include "ajc/errors.hpp"

namespace ajc {

namespace {

std::size_t residue(long n, int p) { return static_cast<std::size_t>(((n % p) + p) % p); }

struct Quad {
  Rat a, b, c;
  Rat at(long n) const { return a * n * n + b * n + c; }
};

Quad through(long x0, const Rat& y0, long x1, const Rat& y1, long x2, const Rat& y2) {
  Rat d1 = (y1 - y0) / (x1 - x0);
  Rat d2 = ((y2 - y1) / (x2 - x1) - d1) / (x2 - x0);
  Quad q;
  q.a = d2;
  q.b = d1 - d2 * (x0 + x1);
  q.c = y0 - d1 * x0 + d2 * x0 * x1;
  return q;
}

}  // namespace

Rat QuasiPoly::value(long n) const {
  std::size_t i = residue(n, period);
  return a[i] * n * n + b[i] * n + c[i];
}

bool QuasiPoly::mono_sloped() const {
  return std::all_of(a.begin(), a.end(), [&](const Rat& x) { return x == a[0]; });
}

QuasiPoly fit_quasi(const std::vector<std::pair<long, DegQ>>& values, int max_period) {
  if (max_period < 1) throw InvalidInput("fit_quasi: max_period must be >= 1");
  auto v = values;
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i].first != v[i - 1].first + 1) throw InvalidInput("fit_quasi: samples must be consecutive");
  if (v.size() < static_cast<std::size_t>(3 * max_period + 6))
    throw InsufficientData("fit_quasi: need at least 3*max_period + 6 samples");

  long best_n = v.back().first + 1;
  int best_p = 0;
  for (int p = 1; p <= max_period; ++p) {
    QuasiPoly q;
    q.period = p;
    q.a.resize(static_cast<std::size_t>(p));
    q.b.resize(static_cast<std::size_t>(p));
    q.c.resize(static_cast<std::size_t>(p));
    long worst_fail = v.front().first - 1;
    bool ok = true;
    for (int i = 0; i < p; ++i) {
      std::vector<std::pair<long, Rat>> cls;
      for (auto it = v.rbegin(); it != v.rend(); ++it)
        if (residue(it->first, p) == static_cast<std::size_t>(i)) cls.emplace_back(it->first, it->second.value());
      if (cls.size() < 4) {
        ok = false;
        break;
      }
      Quad f = through(cls[0].first, cls[0].second, cls[1].first, cls[1].second, cls[2].first, cls[2].second);
      q.a[static_cast<std::size_t>(i)] = f.a;
      q.b[static_cast<std::size_t>(i)] = f.b;
      q.c[static_cast<std::size_t>(i)] = f.c;
      for (std::size_t k = 3; k < cls.size(); ++k)
        if (f.at(cls[k].first) != cls[k].second) {
          worst_fail = std::max(worst_fail, cls[k].first);
          break;
        }
    }
    if (!ok) continue;
    q.N = worst_fail + 1;
    // every residue class needs one confirming sample beyond the three interpolation points
    bool confirmed = true;
    for (int i = 0; i < p; ++i) {
      long cnt = 0;
      for (const auto& s : v)
        if (s.first >= q.N && residue(s.first, p) == static_cast<std::size_t>(i)) ++cnt;
      if (cnt < 4) confirmed = false;
    }
    if (confirmed) return q;
    if (q.N < best_n) {
      best_n = q.N;
      best_p = p;
    }
  }
  throw NoFit("fit_quasi: no quadratic quasi-polynomial with period <= " + std::to_string(max_period) +
              " fits; closest was period " + std::to_string(best_p) + " breaking at n = " + std::to_string(best_n - 1));
}

RInvariants r_invariants(const QuasiPoly& q, int eps) {
  if (eps != 1 && eps != -1) throw InvalidInput("r_invariants: eps must be +1 or -1");
  if (!q.mono_sloped())
    throw InvalidInput("r_invariants: quadratic coefficient is not constant (knot is not mono-sloped)");
  const int modulus = std::lcm(q.period, 2);
  std::vector<std::size_t> odd;
  for (int i = 1; i < modulus; i += 2) odd.push_back(residue(i, q.period));
  RInvariants out;
  bool first = true;
  for (std::size_t i : odd)
    for (std::size_t j : odd) {
      Rat d1 = abs(q.b[i] - q.b[j]);
      Rat d2 = eps * (q.b[i] + q.b[j]) + abs(q.c[i] - q.c[j]);
      if (first || d1 > out.delta1) out.delta1 = d1;
      if (first || d2 > out.delta2) out.delta2 = d2;
      first = false;
    }
  Rat m2 = out.delta2 > 0 ? out.delta2 : Rat(0);
  out.r = 8 * q.a[0] + eps * (2 * out.delta1 + m2);
  return out;
}

bool membership_K(const SlopeData& s) {
  if (!s.plus.mono_sloped() || !s.minus.mono_sloped()) return false;
  for (const auto& b : s.plus.b)
    if (b > 0) return false;
  for (const auto& b : s.minus.b)
    if (b < 0) return false;
  return true;
}

std::vector<std::pair<long, DegQ>> degree_samples(const JonesSeq& j, long lo, long hi, int eps) {
  std::vector<std::pair<long, DegQ>> out;
  for (long n = lo; n <= hi; ++n) out.emplace_back(n, eps > 0 ? d_plus(j(n)) : d_minus(j(n)));
  return out;
}

SlopeData slope_data(const JonesSeq& j, long lo, long hi, int max_period) {
  SlopeData s;
  s.plus = fit_quasi(degree_samples(j, lo, hi, 1), max_period);
  s.minus = fit_quasi(degree_samples(j, lo, hi, -1), max_period);
  return s;
}

DegQ pretzel_degree(int m, long n, int eps, const std::vector<Rat>& r_seq) {
  if (m >= -1 && m <= 1) throw InvalidInput("pretzel_degree: |m| <= 1 is a torus knot, out of scope");
  if (m == -2) throw InvalidInput("pretzel_degree: no closed form for m = -2 (the two-bridge knot 5_2)");
  if (n < 1) throw InvalidInput("pretzel_degree: n must be >= 1");
  if (eps != 1 && eps != -1) throw InvalidInput("pretzel_degree: eps must be +1 or -1");
  auto r_prev = [&]() -> Rat {
    if (r_seq.empty()) throw InvalidInput("pretzel_degree: periodic sequence r_n required");
    return r_seq[residue(n - 1, static_cast<int>(r_seq.size()))];
  };
  const Rat M(m), N(n);
  if (m >= 2) {
    if (eps < 0) return DegQ((M + frac(5, 2)) * (N - 1));
    Rat r = r_prev();
    return DegQ((frac(5, 2) + M + 1 / (4 * M)) * N * N + (1 / (2 * M) - frac(1, 2)) * N -
                (3 + 3 * M / 4 - 1 / (4 * M)) - M * r * r);
  }
  if (eps > 0) return DegQ(frac(5, 2) * N * N + (1 + M) * N - (frac(7, 2) + M));
  Rat r = r_prev();
  const long q = 2L * m + 3;
  Rat b = (n % q != 0) ? frac(1, 2) : frac(2 * m + 1, 2 * q);
  return DegQ(Rat(2) * (M + 2) * (M + 2) / (2 * M + 3) * N * N + b * N - (6 * M + 17) / 8 - (M + frac(3, 2)) * r * r);
}

}  // namespace ajc
