#include "ajc/modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace ajc::modp {

u64 pow(u64 a, long long e, u64 p) {
  if (e < 0) {
    a = inv(a, p);
    e = -e;
  }
  u64 r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("modp::inv of zero");
  return pow(a, static_cast<long long>(p - 2), p);
}

u64 reduce(const mpz_class& x, u64 p) {
  static_assert(sizeof(unsigned long) == sizeof(u64));
  return mpz_fdiv_ui(x.get_mpz_t(), p);
}

u64 Rng::next() {
  u64 z = (s_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

u64 eval(const Poly& a, u64 x, u64 p) {
  u64 r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = add(mul(r, x, p), a[i], p);
  return r;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = add(c[i + j], mul(a[i], b[j], p), p);
  }
  trim(c);
  return c;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = modp::sub(c[i], b[i], p);
  trim(c);
  return c;
}

Poly scale(const Poly& a, u64 c, u64 p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], c, p);
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r, u64 p) {
  if (b.empty()) throw std::domain_error("modp::divmod by zero");
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
  u64 li = inv(b.back(), p);
  while (r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    u64 c = mul(r.back(), li, p);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = modp::sub(r[shift + j], mul(c, b[j], p), p);
    trim(r);
  }
  trim(q);
}

Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly q, r;
    divmod(a, b, q, r, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = scale(a, inv(a.back(), p), p);
  return a;
}

Poly interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p) {
  std::size_t n = xs.size();
  std::vector<u64> dd(ys);
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i)
      dd[i] = mul(modp::sub(dd[i], dd[i - 1], p), inv(modp::sub(xs[i], xs[i - k], p), p), p);
  Poly r;
  for (std::size_t i = n; i-- > 0;) {
    // r = r * (x - xs[i]) + dd[i]
    Poly nr(r.size() + 1, 0);
    for (std::size_t j = 0; j < r.size(); ++j) {
      nr[j + 1] = add(nr[j + 1], r[j], p);
      nr[j] = modp::sub(nr[j], mul(r[j], xs[i], p), p);
    }
    nr[0] = add(nr[0], dd[i], p);
    r = std::move(nr);
  }
  trim(r);
  return r;
}

Poly vanishing(const std::vector<u64>& xs, u64 p) {
  Poly r{1};
  for (u64 x : xs) {
    Poly nr(r.size() + 1, 0);
    for (std::size_t j = 0; j < r.size(); ++j) {
      nr[j + 1] = add(nr[j + 1], r[j], p);
      nr[j] = modp::sub(nr[j], mul(r[j], x, p), p);
    }
    r = std::move(nr);
  }
  return r;
}

bool rational_reconstruct(const Poly& f, const Poly& m, int num_bound, Poly& num, Poly& den, u64 p) {
  Poly r0 = m, r1 = f;
  trim(r1);
  Poly s0{}, s1{1};
  while (degree(r1) >= num_bound) {
    Poly q, r;
    divmod(r0, r1, q, r, p);
    Poly s = sub(s0, mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (s1.empty()) return false;
  if (degree(s1) + num_bound > degree(m)) return false;
  // the denominator must be coprime to the modulus
  if (degree(gcd(s1, m, p)) > 0) return false;
  u64 li = inv(s1.back(), p);
  num = scale(r1, li, p);
  den = scale(s1, li, p);
  return true;
}

bool rational_reconstruct_mq(const Poly& f, const Poly& m, Poly& num, Poly& den, u64 p) {
  Poly r0 = m, r1 = f;
  trim(r1);
  Poly s0{}, s1{1};
  if (r1.empty()) {
    num = {};
    den = {1};
    return true;
  }
  int best = -1;
  Poly best_r, best_s;
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, q, r, p);
    if (degree(q) > best) {
      best = degree(q);
      best_r = r1;
      best_s = s1;
    }
    Poly s = sub(s0, mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (best < 2 || best_s.empty()) return false;
  if (degree(gcd(best_s, m, p)) > 0) return false;
  u64 li = inv(best_s.back(), p);
  num = scale(best_r, li, p);
  den = scale(best_s, li, p);
  return true;
}

bool rational_reconstruct(const mpz_class& x, const mpz_class& m, mpq_class& out) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = x % m;
  if (r1 < 0) r1 += m;
  mpz_class s0 = 0, s1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r = r0 - q * r1;
    mpz_class s = s0 - q * s1;
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s;
  }
  if (s1 == 0 || abs(s1) > bound) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), s1.get_mpz_t(), m.get_mpz_t());
  if (g != 1) return false;
  out = mpq_class(r1, s1);
  out.canonicalize();
  return true;
}

}  // namespace ajc::modp
