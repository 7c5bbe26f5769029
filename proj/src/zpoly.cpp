#include "ajc/zpoly.hpp"

#include <algorithm>

#include "ajc/modp.hpp"

namespace ajc {

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : c(std::move(coeffs)) { trim(); }

ZPoly ZPoly::constant(const mpz_class& v) {
  ZPoly r;
  if (v != 0) r.c.push_back(v);
  return r;
}

void ZPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  std::vector<mpz_class> r(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return ZPoly(std::move(r));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
  std::vector<mpz_class> r(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return ZPoly(std::move(r));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> r(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
  }
  return ZPoly(std::move(r));
}

ZPoly scale(const ZPoly& a, const mpz_class& s) {
  std::vector<mpz_class> r(a.c);
  for (auto& x : r) x *= s;
  return ZPoly(std::move(r));
}

mpz_class content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& x : a.c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& a) {
  if (a.is_zero()) return a;
  mpz_class g = content(a);
  if (a.lc() < 0) g = -g;
  std::vector<mpz_class> r(a.c);
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return ZPoly(std::move(r));
}

bool exact_divide(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    q = ZPoly();
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<mpz_class> r(a.c);
  std::vector<mpz_class> qc(a.c.size() - b.c.size() + 1);
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const mpz_class& top = r[k + b.degree()];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lc().get_mpz_t())) return false;
    mpz_class f = top / b.lc();
    for (int j = 0; j <= b.degree(); ++j) r[k + j] -= f * b.c[j];
    qc[k] = f;
  }
  for (const auto& x : r)
    if (x != 0) return false;
  q = ZPoly(std::move(qc));
  return true;
}

namespace {

modp::Poly image(const ZPoly& a, modp::u64 p) {
  modp::Poly r(a.c.size());
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = modp::reduce(a.c[i], p);
  modp::trim(r);
  return r;
}

// Pseudo-remainder of a by b with the primitive part taken afterwards.
ZPoly prem_primitive(ZPoly a, const ZPoly& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int shift = a.degree() - b.degree();
    mpz_class la = a.lc();
    std::vector<mpz_class> r(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i] * b.lc();
    for (int j = 0; j <= b.degree(); ++j) r[shift + j] -= la * b.c[j];
    a = ZPoly(std::move(r));
  }
  return primitive_part(a);
}

}  // namespace

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return scale(primitive_part(b), content(b));
  if (b.is_zero()) return scale(primitive_part(a), content(a));
  mpz_class g;
  mpz_class ca = content(a), cb = content(b);
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.degree() == 0 || b.degree() == 0) return ZPoly::constant(g);
  // A constant gcd of the images modulo a prime not dividing either leading coefficient proves
  // the gcd over Q is 1.
  for (modp::u64 p : modp::kPrimes) {
    if (modp::reduce(a.lc(), p) == 0 || modp::reduce(b.lc(), p) == 0) continue;
    if (modp::degree(modp::gcd(image(a, p), image(b, p), p)) == 0) return ZPoly::constant(g);
    break;
  }
  ZPoly x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    ZPoly r = prem_primitive(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return scale(primitive_part(x), g);
}

namespace {

int bdeg(const BiPoly& a) { return static_cast<int>(a.size()) - 1; }

void btrim(BiPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

ZPoly bcontent(const BiPoly& a) {
  ZPoly g;
  for (const auto& x : a) {
    g = gcd(g, x);
    if (g.degree() == 0 && g.lc() == 1) break;
  }
  return g;
}

BiPoly bdiv_content(const BiPoly& a, const ZPoly& g) {
  BiPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) exact_divide(a[i], g, r[i]);
  return r;
}

BiPoly bprimitive(const BiPoly& a) {
  if (a.empty()) return a;
  ZPoly g = bcontent(a);
  if (g.lc() < 0) g = scale(g, -1);
  BiPoly r = bdiv_content(a, g);
  if (r.back().lc() < 0)
    for (auto& x : r) x = scale(x, -1);
  return r;
}

BiPoly bprem_primitive(BiPoly a, const BiPoly& b) {
  while (!a.empty() && bdeg(a) >= bdeg(b)) {
    int shift = bdeg(a) - bdeg(b);
    ZPoly la = a.back();
    BiPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * b.back();
    for (int j = 0; j <= bdeg(b); ++j) r[shift + j] = r[shift + j] - la * b[j];
    btrim(r);
    a = std::move(r);
  }
  return bprimitive(a);
}

}  // namespace

BiPoly bigcd(const BiPoly& a0, const BiPoly& b0) {
  BiPoly a = a0, b = b0;
  btrim(a);
  btrim(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  ZPoly g = gcd(bcontent(a), bcontent(b));
  BiPoly x = bprimitive(a), y = bprimitive(b);
  if (bdeg(x) < bdeg(y)) std::swap(x, y);
  while (!y.empty()) {
    if (bdeg(y) == 0) {
      x = BiPoly{ZPoly::constant(1)};
      break;
    }
    BiPoly r = bprem_primitive(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  BiPoly out = bprimitive(x);
  for (auto& z : out) z = z * g;
  return out;
}

}  // namespace ajc
