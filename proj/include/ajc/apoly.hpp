#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ajc/laurent.hpp"

namespace ajc {

// Commutative Laurent polynomial in L and M over Q; keys are (L-exponent, M-exponent).
// cleared() shifts to nonnegative exponents and records the removed monomial L^unit_l M^unit_m.
class CommPoly {
 public:
  using Key = std::pair<int, int>;
  using Map = std::map<Key, Rat>;

  CommPoly() = default;
  CommPoly(long c);  // NOLINT
  static CommPoly monomial(const Rat& c, int l, int m);
  static CommPoly L(int k = 1) { return monomial(1, k, 0); }
  static CommPoly M(int k = 1) { return monomial(1, 0, k); }
  // Each entry is (L-exponent, M-exponent, coefficient).
  static CommPoly from_terms(const std::vector<std::tuple<int, int, Rat>>& terms);

  bool is_zero() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }
  void add_term(int l, int m, const Rat& c);
  Rat coeff(int l, int m) const;

  int min_l() const;
  int max_l() const;
  int min_m() const;
  int max_m() const;
  // Coefficient of L^k as a polynomial in M alone.
  CommPoly l_coeff(int k) const;

  CommPoly operator-() const;
  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  // Equality of the polynomial part; the recorded unit is bookkeeping and is not compared.
  friend bool operator==(const CommPoly& a, const CommPoly& b) { return a.terms_ == b.terms_; }

  CommPoly shifted(int l, int m) const;
  CommPoly scaled(const Rat& c) const;
  CommPoly pow(unsigned e) const;
  // (L, M) -> (sl L, sm M) for signs sl, sm.
  CommPoly sign_sub(int sl, int sm) const;
  // M -> M^k, k != 0.
  CommPoly m_power(int k) const;
  // L^{max_l} P(1/L, M), the L-reversal.
  CommPoly l_reversed() const;
  // Value at L = c.
  CommPoly at_l(const Rat& c) const;

  // Nonnegative exponents with minimal L- and M-exponents 0; unit records the removed monomial.
  CommPoly cleared() const;
  // cleared(), integer coefficients with content 1, leading coefficient (max L, then max M) positive.
  CommPoly normalized() const;
  int unit_l = 0;
  int unit_m = 0;

  std::string to_string() const;

 private:
  Map terms_;
};

// Exact division in Q[L^{+-1}, M^{+-1}]; false if b does not divide a.
bool comm_divide(const CommPoly& a, const CommPoly& b, CommPoly& q);
// Gcd in Q[M] of polynomials in M alone, monic.
CommPoly gcd_m(const CommPoly& a, const CommPoly& b);

// Polynomial in an auxiliary variable lambda with CommPoly coefficients; c[i] multiplies lambda^i.
using LambdaPoly = std::vector<CommPoly>;
// P(L, M) -> P(lambda, M) as a LambdaPoly.
LambdaPoly as_lambda(const CommPoly& p);

// Res_lambda by the subresultant PRS.
CommPoly resultant(const LambdaPoly& p, const LambdaPoly& q);
// Res_lambda as the fraction-free determinant of the Sylvester matrix.
CommPoly resultant_sylvester(const LambdaPoly& p, const LambdaPoly& q);

// R(L, M) = Res_lambda(A(lambda, M), lambda^2 - L).
CommPoly r_poly(const CommPoly& a);
// (L - 1) Res_lambda(A(lambda, M^2), lambda^2 - L) (L + M^{-2r}), unit-cleared; r odd.
CommPoly cable_a(const CommPoly& a, int r);
CommPoly b_poly(const CommPoly& a);
CommPoly c_poly(const CommPoly& r);
bool even_m_symmetry(const CommPoly& p);
CommPoly square_sub(const CommPoly& p);
bool odd_L_term_exists(const CommPoly& p);

struct NewtonPolygon {
  // Counterclockwise hull vertices (L-exponent, M-exponent), starting at the lowest-leftmost point.
  std::vector<std::pair<int, int>> vertices;
  bool contains(std::pair<int, int> pt) const;
};
NewtonPolygon newton_polygon(const CommPoly& p);

}  // namespace ajc
