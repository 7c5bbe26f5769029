#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ajc/jones.hpp"
#include "ajc/laurent.hpp"

namespace ajc {

// value(n) = a(n mod p) n^2 + b(n mod p) n + c(n mod p), valid for n >= N.
struct QuasiPoly {
  int period = 1;
  std::vector<Rat> a, b, c;
  long N = 0;

  Rat value(long n) const;
  bool mono_sloped() const;
};

struct RInvariants {
  Rat delta1, delta2, r;
};

struct SlopeData {
  QuasiPoly plus, minus;
};

QuasiPoly fit_quasi(const std::vector<std::pair<long, DegQ>>& values, int max_period);

// eps = +1 or -1. The delta maxima run over odd n, i.e. odd residues modulo lcm(period, 2).
RInvariants r_invariants(const QuasiPoly& q, int eps);
bool membership_K(const SlopeData& s);

// Degree samples d_+ (eps = +1) or d_- (eps = -1) of J(n) for n in [lo, hi].
std::vector<std::pair<long, DegQ>> degree_samples(const JonesSeq& j, long lo, long hi, int eps);
SlopeData slope_data(const JonesSeq& j, long lo, long hi, int max_period);

// Degrees of the pretzel knots K(m) in closed form; r_seq is the periodic sequence r_n
// (|r_k| <= 1/2) with r_k = r_seq[k mod size]; the formulas use r_{n-1}.
DegQ pretzel_degree(int m, long n, int eps, const std::vector<Rat>& r_seq);

}  // namespace ajc
