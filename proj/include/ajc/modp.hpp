#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace ajc::modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Primes just below 2^62; products fit in unsigned __int128.
inline constexpr std::array<u64, 8> kPrimes = {
    4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL,
    4611686018427387761ULL, 4611686018427387751ULL, 4611686018427387737ULL,
    4611686018427387733ULL, 4611686018427387709ULL};

inline u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 pow(u64 a, long long e, u64 p);  // negative e uses the inverse
u64 inv(u64 a, u64 p);
u64 reduce(const mpz_class& x, u64 p);

// splitmix64; deterministic stream for sampling evaluation points.
class Rng {
 public:
  explicit Rng(u64 seed) : s_(seed) {}
  u64 next();
  u64 below(u64 bound) { return next() % bound; }

 private:
  u64 s_;
};

// Dense univariate polynomial over F_p, c[i] is the coefficient of x^i; trimmed.
using Poly = std::vector<u64>;
void trim(Poly& a);
int degree(const Poly& a);
u64 eval(const Poly& a, u64 x, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly scale(const Poly& a, u64 c, u64 p);
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r, u64 p);
Poly gcd(Poly a, Poly b, u64 p);  // monic
// Newton interpolation through (xs[i], ys[i]) with distinct xs.
Poly interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p);
// Product of (x - xs[i]).
Poly vanishing(const std::vector<u64>& xs, u64 p);
// Finds n/d with deg n < k, deg d <= N - k, n = d*f mod m, via extended Euclid; d monic.
bool rational_reconstruct(const Poly& f, const Poly& m, int num_bound, Poly& num, Poly& den, u64 p);

// Maximal-quotient variant: picks the Euclidean step just before the largest quotient, so no
// degree split is needed. Fails unless that quotient has degree >= 2.
bool rational_reconstruct_mq(const Poly& f, const Poly& m, Poly& num, Poly& den, u64 p);

// Integer rational reconstruction of x mod m with |num|, den below sqrt(m/2).
bool rational_reconstruct(const mpz_class& x, const mpz_class& m, mpq_class& out);

}  // namespace ajc::modp
