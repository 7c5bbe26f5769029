#pragma once

#include <optional>
#include <vector>

#include "ajc/recurrence.hpp"

namespace ajc::detail {

// Values lie in t^{e0 + e1 n} Z[t^{+-g}]. Terms c t^i M^j L^k of an annihilator then split into
// independent classes, and one class may be assumed: j a multiple of h = g / gcd(g, 2) and
// i = -e1 k (mod g).
struct Lattice {
  int g = 1;
  int e1 = 0;
  int h() const { return g % 2 == 0 ? g / 2 : g; }
  int rho(int k) const { return ((-e1 * k) % g + g) % g; }
};

Lattice detect_lattice(const std::vector<LaurentT>& values);

struct WindowPlan {
  std::size_t unknowns = 0;
  std::size_t equations = 0;  // scalar equations (t-coefficient positions) over the range
};
WindowPlan window_plan(const std::vector<LaurentT>& values, long n_lo, const Lattice& lat, int d, int deg_m,
                       int half_width);

// Exactly order d; nullopt when no solution exists within the bounds.
std::optional<TorusOp> guess_window(const std::vector<LaurentT>& values, long n_lo, const Lattice& lat, int d,
                                    int deg_m, int deg_t, std::uint64_t seed, int* used_width);
std::optional<TorusOp> guess_special(const JonesSeq& j, long n_lo, long n_hi, const Lattice& lat, int d, int deg_m,
                                     int deg_t, std::uint64_t seed);

}  // namespace ajc::detail
