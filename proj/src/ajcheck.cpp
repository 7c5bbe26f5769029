#include "ajc/ajcheck.hpp"

#include <numeric>

#include "ajc/errors.hpp"
#include "ajc/recurrence.hpp"

namespace ajc {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Match:
      return "match";
    case Verdict::Mismatch:
      return "mismatch";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

namespace {

AJVerdict inconclusive(std::string why) {
  AJVerdict v;
  v.status = Verdict::Inconclusive;
  v.diagnostic = std::move(why);
  return v;
}

AJVerdict mismatch(std::string why) {
  AJVerdict v;
  v.status = Verdict::Mismatch;
  v.diagnostic = std::move(why);
  return v;
}

CommPoly mirror_a(const CommPoly& a) { return a.normalized().l_reversed().normalized(); }

// Runs check with A, then with its L-reversal when the first attempt is a mismatch.
template <class F>
AJVerdict with_mirror_retry(const CommPoly& a, F check) {
  AJVerdict direct = check(a.normalized());
  if (direct.status != Verdict::Mismatch) return direct;
  AJVerdict mirrored = check(mirror_a(a));
  if (mirrored.status == Verdict::Match) {
    mirrored.convention = "mirror";
    return mirrored;
  }
  direct.diagnostic += "; mirror convention: " + mirrored.diagnostic;
  return direct;
}

}  // namespace

AJVerdict compare_up_to_m(const CommPoly& lhs, const CommPoly& rhs) {
  if (lhs.is_zero()) return inconclusive("left side vanishes");
  if (rhs.is_zero()) throw InvalidInput("compare: zero right side");
  const int l_lo = lhs.unit_l + lhs.min_l(), l_hi = lhs.unit_l + lhs.max_l();
  const int r_lo = rhs.unit_l + rhs.min_l(), r_hi = rhs.unit_l + rhs.max_l();
  if (l_lo != r_lo || l_hi != r_hi)
    return mismatch("L-exponent range [" + std::to_string(l_lo) + ", " + std::to_string(l_hi) + "] vs [" +
                    std::to_string(r_lo) + ", " + std::to_string(r_hi) + "]");
  const CommPoly a = lhs.shifted(-lhs.min_l(), -lhs.min_m());
  const CommPoly b = rhs.shifted(-rhs.min_l(), -rhs.min_m());
  const int top = a.max_l();
  const CommPoly a_top = a.l_coeff(top), b_top = b.l_coeff(top);
  const CommPoly diff = a * b_top - a_top * b;
  if (!diff.is_zero())
    return mismatch("cross product a*lc(b) - lc(a)*b has " + std::to_string(diff.terms().size()) + " terms");
  AJVerdict v;
  v.status = Verdict::Match;
  const CommPoly g = gcd_m(a_top, b_top);
  comm_divide(a_top, g, v.cofactor_num);
  comm_divide(b_top, g, v.cofactor_den);
  const Rat lc = v.cofactor_den.terms().rbegin()->second;
  v.cofactor_num = v.cofactor_num.scaled(1 / lc);
  v.cofactor_den = v.cofactor_den.scaled(1 / lc);
  return v;
}

AJVerdict aj_compare(const TorusOp& alpha, const CommPoly& a) {
  if (alpha.is_zero() || a.is_zero()) throw InvalidInput("aj_compare: zero input");
  const CommPoly e = epsilon_reduce(alpha);
  return with_mirror_retry(a, [&](const CommPoly& aa) { return compare_up_to_m(e, b_poly(aa)); });
}

AJVerdict c3_check(const TorusOp& alpha_odd, const CommPoly& a) {
  if (alpha_odd.is_zero() || a.is_zero()) throw InvalidInput("c3_check: zero input");
  const CommPoly e = epsilon_reduce(alpha_odd);
  if (e.is_zero()) return inconclusive("epsilon(alpha) vanishes");
  const CommPoly at_one = e.at_l(1);
  if (!at_one.is_zero()) return mismatch("epsilon(alpha) is not divisible by L - 1; value at L = 1: " + at_one.to_string());
  CommPoly q;
  comm_divide(e, CommPoly::L() - 1, q);
  q.unit_l = e.unit_l;
  q.unit_m = e.unit_m;
  return with_mirror_retry(a, [&](const CommPoly& aa) { return compare_up_to_m(q, square_sub(r_poly(aa))); });
}

AJVerdict cable_aj_assemble(const TorusOp& alpha_odd, const CommPoly& a, int r) {
  if (r % 2 == 0) throw InvalidInput("cable_aj_assemble: r must be odd");
  if (alpha_odd.is_zero() || a.is_zero()) throw InvalidInput("cable_aj_assemble: zero input");
  const CommPoly e = epsilon_reduce(cable_factorize(alpha_odd, r));
  return with_mirror_retry(a, [&](const CommPoly& aa) { return compare_up_to_m(e, cable_a(aa, r)); });
}

bool theorem_range(const KnotClass& cls, int r) {
  if (r % 2 == 0) throw InvalidInput("theorem_range: r must be odd");
  const Rat R(r);
  switch (cls.kind) {
    case KnotClass::TwoBridge:
      if (cls.c_plus < 0 || cls.c_minus < 0) throw InvalidInput("theorem_range: crossing counts must be >= 0");
      return (R - 4 * cls.c_plus) * (R + 4 * cls.c_minus) > 0;
    case KnotClass::DoubleTwist: {
      const int k = cls.k, l = cls.l;
      if (k == l) throw InvalidInput("theorem_range: double twist knots need k != l");
      if (k == 0 || l == 0) throw InvalidInput("theorem_range: double twist knots need k, l nonzero");
      if (k > 0 && l > 0) return R * (R - 4 * (k + l - 1)) > 0;
      if (k < 0 && l < 0) return R * (R - 4 * (k + l + 1)) > 0;
      return (R + 4 * k) * (R + 4 * l) > 0;
    }
    case KnotClass::Pretzel: {
      const int m = cls.m;
      if (m >= -1 && m <= 1) throw InvalidInput("theorem_range: pretzel knots need |m| >= 2");
      if (std::gcd(m, 3) != 1) throw InvalidInput("theorem_range: pretzel knots need gcd(m, 3) = 1");
      if (m >= 2) return R * (R - (frac(33 * m, 4) + frac(3, m) + 19)) > 0;
      if (m == -2) return R * (R - 20) > 0;
      const Rat bound = frac(33 * m, 4) + frac(6, 2 * m + 3) + frac(171, 8);
      return (R - bound) * (R - 20) > 0;
    }
  }
  return false;
}

}  // namespace ajc
