#pragma once

#include <string>

#include "ajc/apoly.hpp"
#include "ajc/qtorus.hpp"

namespace ajc {

enum class Verdict { Match, Mismatch, Inconclusive };
const char* verdict_name(Verdict v);

struct AJVerdict {
  Verdict status = Verdict::Inconclusive;
  // "direct", or "mirror" when the match needed A(L, M) replaced by its L-reversal.
  std::string convention = "direct";
  // On a match, lhs = (cofactor_num / cofactor_den) * rhs with both polynomials in M alone.
  CommPoly cofactor_num, cofactor_den;
  std::string diagnostic;
};

// lhs = u(M) rhs for a rational function u of M alone. L-exponents are compared exactly,
// including the recorded units; M-units are ignored.
AJVerdict compare_up_to_m(const CommPoly& lhs, const CommPoly& rhs);

// epsilon(alpha) against (L - 1) A.
AJVerdict aj_compare(const TorusOp& alpha, const CommPoly& a);
// epsilon(alpha_odd) / (L - 1) against R(L, M^2).
AJVerdict c3_check(const TorusOp& alpha_odd, const CommPoly& a);
// epsilon(alpha_odd M^r (L + t^{-2r} M^{-2r})) against the cable A-polynomial, which already
// carries the factor (L - 1).
AJVerdict cable_aj_assemble(const TorusOp& alpha_odd, const CommPoly& a, int r);

struct KnotClass {
  enum Kind { TwoBridge, DoubleTwist, Pretzel } kind = TwoBridge;
  int c_plus = 0, c_minus = 0;  // TwoBridge: crossing counts
  int k = 0, l = 0;             // DoubleTwist J(k, l)
  int m = 0;                    // Pretzel K(m), the (-2, 3, 2m + 3)-pretzel knot
};

// The published odd-r ranges for the AJ conjecture on (r, 2)-cables.
bool theorem_range(const KnotClass& cls, int r);

}  // namespace ajc
