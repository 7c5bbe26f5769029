#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "ajc/laurent.hpp"

namespace ajc {

class JonesSeq;

// Element of the quantum torus in left normal form: sum over k of a_k(t, M) L^k, with LM = t^2 ML.
class TorusOp {
 public:
  using Map = std::map<int, PolyTM>;

  TorusOp() = default;
  TorusOp(long c);  // NOLINT
  static TorusOp term(const PolyTM& a, int k);
  static TorusOp L(int k = 1) { return term(PolyTM(1), k); }
  static TorusOp M(int j = 1) { return term(PolyTM::monomial(1, 0, j), 0); }
  static TorusOp t(int i) { return term(PolyTM::monomial(1, i, 0), 0); }

  bool is_zero() const { return coeffs_.empty(); }
  const Map& coeffs() const { return coeffs_; }
  const PolyTM& coeff(int k) const;
  void add_term(const PolyTM& a, int k);
  int min_l() const;
  int max_l() const;
  std::size_t term_count() const;

  TorusOp operator-() const;
  TorusOp& operator+=(const TorusOp& o);
  TorusOp& operator-=(const TorusOp& o);
  friend TorusOp operator+(TorusOp a, const TorusOp& b) { return a += b; }
  friend TorusOp operator-(TorusOp a, const TorusOp& b) { return a -= b; }
  friend TorusOp operator*(const TorusOp& a, const TorusOp& b);
  friend bool operator==(const TorusOp& a, const TorusOp& b) { return a.coeffs_ == b.coeffs_; }

  // Left multiplication by a scalar in (t, M).
  TorusOp left_scaled(const PolyTM& s) const;
  // Applies a monomial substitution to every coefficient (see PolyTM::substitute).
  TorusOp map_coeffs(const std::function<PolyTM(const PolyTM&)>& f) const;
  std::string to_string() const;

 private:
  Map coeffs_;
};

TorusOp top_mul(const TorusOp& a, const TorusOp& b);

// (op f)(n) = sum_k a_k(t, t^{2n}) f(n + k).
LaurentT apply(const TorusOp& op, const std::function<LaurentT(long)>& f, long n);
LaurentT apply(const TorusOp& op, const JonesSeq& f, long n);

// sigma(M^k L^l) = M^{-k} L^{-l}, extended linearly over Z[t^{+-1}].
TorusOp sigma(const TorusOp& op);
// (-1)^{k+l} t^{kl} (M^k L^l + M^{-k} L^{-l}); requires gcd(k, l) = 1.
TorusOp fg_basis(int k, int l);

// Element of the even subring in ell = L^2, with a(M) ell^i b(M) ell^k = a(M) b(t^{4i} M) ell^{i+k}.
class EvenOp {
 public:
  using Map = std::map<int, PolyTM>;
  EvenOp() = default;
  static EvenOp term(const PolyTM& a, int k);
  const Map& coeffs() const { return coeffs_; }
  void add_term(const PolyTM& a, int k);
  friend EvenOp operator*(const EvenOp& a, const EvenOp& b);
  friend EvenOp operator+(EvenOp a, const EvenOp& b);
  friend bool operator==(const EvenOp& a, const EvenOp& b) { return a.coeffs_ == b.coeffs_; }

 private:
  Map coeffs_;
};

// ell -> L^2.
TorusOp embed_even(const EvenOp& p);
// Returns (P(L^2, M), P(L, t^2 M^2)).
std::pair<TorusOp, TorusOp> even_substitute(const EvenOp& p);

}  // namespace ajc
