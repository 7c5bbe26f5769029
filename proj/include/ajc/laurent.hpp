#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ajc {

using Int = mpz_class;
using Rat = mpq_class;

// n / d in canonical form; GMP arithmetic requires a positive, reduced denominator.
inline Rat frac(long n, long d) {
  Rat q(n, d);
  q.canonicalize();
  return q;
}

// Laurent polynomial in t over Z. Terms are kept sorted by exponent with no zero coefficients.
class LaurentT {
 public:
  using Term = std::pair<int, Int>;

  LaurentT() = default;
  LaurentT(long c);  // NOLINT: constants convert implicitly
  explicit LaurentT(const Int& c);
  static LaurentT monomial(const Int& c, int e);
  // Sums duplicate exponents and drops zeros.
  static LaurentT from_terms(std::vector<Term> terms);
  // Quantum integer [m] = (t^{2m} - t^{-2m}) / (t^2 - t^{-2}), with [-m] = -[m].
  static LaurentT qint(long m);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  int min_exp() const;
  int max_exp() const;
  Int coeff(int e) const;

  LaurentT operator-() const;
  LaurentT& operator+=(const LaurentT& o);
  LaurentT& operator-=(const LaurentT& o);
  LaurentT& operator*=(const LaurentT& o);
  friend LaurentT operator+(LaurentT a, const LaurentT& b) { return a += b; }
  friend LaurentT operator-(LaurentT a, const LaurentT& b) { return a -= b; }
  friend LaurentT operator*(const LaurentT& a, const LaurentT& b);
  friend bool operator==(const LaurentT& a, const LaurentT& b) { return a.terms_ == b.terms_; }

  LaurentT shifted(int k) const;            // times t^k
  LaurentT scaled(const Int& c) const;      // times c
  LaurentT subst_power(int k) const;        // t -> t^k, k != 0
  LaurentT pow(unsigned e) const;
  // Exact quotient when b divides *this in Z[t^{+-1}]; false otherwise.
  bool divides_into(const LaurentT& b, LaurentT& quotient) const;

  std::uint64_t eval_mod(std::uint64_t tau, std::uint64_t p) const;
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

LaurentT lt_add(const LaurentT& a, const LaurentT& b);
LaurentT lt_mul(const LaurentT& a, const LaurentT& b);
LaurentT lt_neg(const LaurentT& a);

// Degrees measured in t^{-4}: quarter-integers for colored Jones values.
class DegQ {
 public:
  DegQ() = default;
  explicit DegQ(Rat v) : v_(std::move(v)) { v_.canonicalize(); }
  DegQ(long n) : v_(n) {}  // NOLINT
  const Rat& value() const { return v_; }
  bool quarter_integral() const;
  friend bool operator==(const DegQ& a, const DegQ& b) { return a.v_ == b.v_; }
  friend auto operator<=>(const DegQ& a, const DegQ& b) { return cmp(a.v_, b.v_) <=> 0; }
  std::string to_string() const { return v_.get_str(); }

 private:
  Rat v_;
};

DegQ d_plus(const LaurentT& f);
DegQ d_minus(const LaurentT& f);

// Laurent polynomial in (t, M) over Z; keys are (t-exponent, M-exponent).
class PolyTM {
 public:
  using Key = std::pair<int, int>;
  using Map = std::map<Key, Int>;

  PolyTM() = default;
  PolyTM(long c);  // NOLINT
  static PolyTM monomial(const Int& c, int te, int me);
  static PolyTM from_laurent(const LaurentT& f, int me = 0);

  bool is_zero() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  void add_term(int te, int me, const Int& c);

  PolyTM operator-() const;
  PolyTM& operator+=(const PolyTM& o);
  PolyTM& operator-=(const PolyTM& o);
  friend PolyTM operator+(PolyTM a, const PolyTM& b) { return a += b; }
  friend PolyTM operator-(PolyTM a, const PolyTM& b) { return a -= b; }
  friend PolyTM operator*(const PolyTM& a, const PolyTM& b);
  friend bool operator==(const PolyTM& a, const PolyTM& b) { return a.terms_ == b.terms_; }

  PolyTM shifted(int te, int me) const;        // times t^te M^me
  PolyTM scaled(const Int& c) const;
  // a(t, M) -> a(t, t^s M)
  PolyTM scale_m(int s) const;
  // a(t, M) -> a(t^{tk}, t^{tm} M^{mk})
  PolyTM substitute(int tk, int tm, int mk) const;
  // M = t^{2n}
  LaurentT at_color(long n) const;
  // Coefficient of M^j as a Laurent polynomial in t.
  LaurentT m_coeff(int j) const;

  int min_t() const;
  int max_t() const;
  int min_m() const;
  int max_m() const;
  // Leading term in lex order (M-degree, then t-degree).
  std::pair<Key, Int> leading() const;

  std::string to_string() const;

 private:
  Map terms_;
};

// Removes the gcd in Z[t^{+-1}, M] and the monomial unit from a coefficient list.
std::vector<PolyTM> content_normalize(const std::vector<PolyTM>& coeffs);
// Gcd of two elements of Z[t, M] (no negative exponents), normalized as above.
PolyTM poly_gcd(const PolyTM& a, const PolyTM& b);
// Exact division in Z[t^{+-1}, M^{+-1}]; false if b does not divide a.
bool poly_divide(const PolyTM& a, const PolyTM& b, PolyTM& q);

}  // namespace ajc
