#pragma once

#include <gmpxx.h>

#include <vector>

namespace ajc {

// Dense univariate polynomial over Z; c[i] is the coefficient of x^i, no trailing zeros.
struct ZPoly {
  std::vector<mpz_class> c;

  ZPoly() = default;
  explicit ZPoly(std::vector<mpz_class> coeffs);
  static ZPoly constant(const mpz_class& v);

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const mpz_class& lc() const { return c.back(); }
  void trim();
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c == b.c; }
};

ZPoly operator+(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a, const ZPoly& b);
ZPoly operator*(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const mpz_class& s);
mpz_class content(const ZPoly& a);
ZPoly primitive_part(const ZPoly& a);  // positive leading coefficient
bool exact_divide(const ZPoly& a, const ZPoly& b, ZPoly& q);
// Gcd over Z with positive leading coefficient; gcd(0, 0) = 0.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

// Polynomial in y with ZPoly coefficients in x: Z[x][y].
using BiPoly = std::vector<ZPoly>;
BiPoly bigcd(const BiPoly& a, const BiPoly& b);

}  // namespace ajc
