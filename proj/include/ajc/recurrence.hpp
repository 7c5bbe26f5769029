#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ajc/apoly.hpp"
#include "ajc/jones.hpp"
#include "ajc/qtorus.hpp"

namespace ajc {

enum class GuessEngine {
  Auto,
  // Unknowns c_{k,j,i} for every t-power in a window; rows are random specializations of t.
  // Works from few colors but the unknown count grows with the window.
  Window,
  // Unknowns c_{k,j} over F_p(t) at a random t; the t-dependence is rebuilt by rational
  // reconstruction over many specializations. Needs more colors than unknowns.
  Specialize,
};

struct GuessOptions {
  GuessEngine engine = GuessEngine::Auto;
  std::uint64_t seed = 0x5EED0001;
  // Auto picks Window while its unknown count stays below this limit and the color range stays
  // below window_color_limit; longer ranges go to Specialize when the sequence has a modular
  // evaluator, since exact values at high colors are expensive.
  std::size_t window_unknown_limit = 3000;
  long window_color_limit = 40;
  // Held-out verification covers this many colors past the guessing range; 0 means twice the
  // size of the guessing range.
  long held_out = 0;
};

struct RecurrenceCandidate {
  TorusOp op;
  int d = 0;       // ansatz L-degree bound
  int deg_m = 0;   // ansatz M-degree bound
  int deg_t = 0;   // window half-width (Window) or cap on reconstructed t-degree (Specialize)
  long guess_lo = 0, guess_hi = 0;
  long verify_lo = 0, verify_hi = 0;  // held-out colors checked after guessing
  std::string engine;
};

// Guesses an annihilator with L-exponents in 0..d', for the least d' <= d that admits one.
// Colors n_lo..n_hi are used. Returns nullopt when no order up to d admits a solution within the
// bounds. Throws InsufficientData when the colors cannot determine the unknowns.
std::optional<RecurrenceCandidate> guess(const JonesSeq& j, int d, int deg_m, int deg_t, long n_lo, long n_hi,
                                         const GuessOptions& opt = {});

// guess with bounds chosen automatically. Orders 0..d are tried in turn; for each, the M-degree
// bound doubles from 16 up to max_deg_m and each attempt takes as many colors as its ansatz
// needs. The result is minimal in L-degree among operators with M-degree <= max_deg_m. Sequences
// without a modular evaluator use the window engine. Returns nullopt when every bound is exhausted.
std::optional<RecurrenceCandidate> guess_auto(const JonesSeq& j, int d, long n_lo, int max_deg_m = 256,
                                              const GuessOptions& opt = {});

// Exact check of op J = 0 on colors lo..hi.
bool verify(const TorusOp& op, const JonesSeq& j, long lo, long hi);
// The same check for a candidate; the range must be disjoint from the guessing range.
bool verify(const RecurrenceCandidate& c, const JonesSeq& j, long lo, long hi);
// Check modulo several primes at random t; for sequences whose exact values are too large.
bool verify_mod(const TorusOp& op, const JonesSeq& j, long lo, long hi, std::uint64_t seed, int rounds = 2);

// Content-normalizes the coefficients of op (coprime, leading coefficient positive).
TorusOp normalize_op(const TorusOp& op);

// t = -1; L and M commute. Result unit-cleared.
CommPoly epsilon_reduce(const TorusOp& op);

// M^r (L + t^{-2r} M^{-2r}).
TorusOp cable_factor(int r);
// alpha_odd * M^r (L + t^{-2r} M^{-2r}).
TorusOp cable_factorize(const TorusOp& alpha_odd, int r);

// denominator * a = quotient * b + remainder, L-degree(remainder) < L-degree(b); the
// denominator lies in Z[t^{+-1}, M^{+-1}] and is 1 when b has a monomial leading coefficient.
struct LeftDivision {
  TorusOp quotient, remainder;
  PolyTM denominator;
};
LeftDivision left_divide(const TorusOp& a, const TorusOp& b);

}  // namespace ajc
