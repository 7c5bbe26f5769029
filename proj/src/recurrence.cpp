#include "ajc/recurrence.hpp"

#include <algorithm>

#include "ajc/errors.hpp"
#include "ajc/modp.hpp"
#include "guess_internal.hpp"

namespace ajc {

using modp::u64;

namespace {

std::vector<LaurentT> exact_values(const JonesSeq& j, long lo, long hi) {
  std::vector<LaurentT> v;
  for (long n = lo; n <= hi; ++n) v.push_back(j(n));
  return v;
}

bool held_out_ok(const TorusOp& op, const JonesSeq& j, long lo, long hi, std::uint64_t seed) {
  if (j.has_modular()) return verify_mod(op, j, lo, hi, seed);
  return verify(op, j, lo, hi);
}

}  // namespace

std::optional<RecurrenceCandidate> guess(const JonesSeq& j, int d, int deg_m, int deg_t, long n_lo, long n_hi,
                                         const GuessOptions& opt) {
  if (d < 0 || deg_m < 0 || deg_t < 1) throw InvalidInput("recurrence guess: bounds must be d >= 0, degM >= 0, degT >= 1");
  if (n_hi < n_lo + d) throw InsufficientData("recurrence guess: color range shorter than the order");
  // The lattice is read off a short prefix; it is a property of the whole sequence.
  const long probe_hi = std::min(n_hi, n_lo + 8);
  const detail::Lattice lat = detail::detect_lattice(exact_values(j, n_lo, probe_hi));

  GuessEngine engine = opt.engine;
  std::vector<LaurentT> values;
  if (engine == GuessEngine::Auto) {
    std::vector<LaurentT> probe = exact_values(j, n_lo, probe_hi);
    auto plan = detail::window_plan(probe, n_lo, lat, d, deg_m, deg_t);
    const bool short_range = !j.has_modular() || n_hi - n_lo + 1 <= opt.window_color_limit;
    engine = plan.unknowns <= opt.window_unknown_limit && short_range ? GuessEngine::Window : GuessEngine::Specialize;
  }
  if (engine == GuessEngine::Window) values = exact_values(j, n_lo, n_hi);

  const long held = opt.held_out > 0 ? opt.held_out : 2 * (n_hi - n_lo + 1);
  for (int dd = 0; dd <= d; ++dd) {
    std::optional<TorusOp> op;
    int width = deg_t;
    if (engine == GuessEngine::Window) {
      op = detail::guess_window(values, n_lo, lat, dd, deg_m, deg_t, opt.seed + static_cast<unsigned>(dd), &width);
    } else {
      op = detail::guess_special(j, n_lo, n_hi, lat, dd, deg_m, deg_t, opt.seed + static_cast<unsigned>(dd));
    }
    if (!op) continue;
    RecurrenceCandidate c;
    c.op = normalize_op(*op);
    c.d = dd;
    c.deg_m = deg_m;
    c.deg_t = width;
    c.guess_lo = n_lo;
    c.guess_hi = n_hi;
    c.verify_lo = n_hi + 1;
    c.verify_hi = n_hi + held;
    c.engine = engine == GuessEngine::Window ? "window" : "specialize";
    if (!held_out_ok(c.op, j, c.verify_lo, c.verify_hi, opt.seed ^ 0xA5A5A5A5ULL))
      throw InsufficientData("recurrence guess: order-" + std::to_string(dd) +
                             " solution fails held-out verification; supply more colors");
    return c;
  }
  return std::nullopt;
}

std::optional<RecurrenceCandidate> guess_auto(const JonesSeq& j, int d, long n_lo, int max_deg_m,
                                              const GuessOptions& opt) {
  if (d < 0 || max_deg_m < 1) throw InvalidInput("recurrence guess: bounds must be d >= 0, degM >= 1");
  GuessOptions o = opt;
  if (!j.has_modular()) o.engine = GuessEngine::Window;
  // Orders go first: a higher order often admits a smaller M-degree, so escalating the degree
  // across all orders at once would return a non-minimal operator.
  for (int k = 0; k <= d; ++k) {
    for (int deg_m = std::min(16, max_deg_m);; deg_m = std::min(2 * deg_m, max_deg_m)) {
      const int deg_t = 8 * deg_m + 64;
      const long colors = static_cast<long>(k + 1) * (deg_m + 1) + 16;
      try {
        if (auto c = guess(j, k, deg_m, deg_t, n_lo, n_lo + colors - 1, o)) return c;
      } catch (const ResourceLimit&) {
        // the t-degree outgrew the cap tied to this M-degree bound; the next bound raises both
      }
      if (deg_m == max_deg_m) break;
    }
  }
  return std::nullopt;
}

bool verify(const TorusOp& op, const JonesSeq& j, long lo, long hi) {
  if (op.is_zero()) throw InvalidInput("verify: the zero operator is not a candidate");
  for (long n = lo; n <= hi; ++n)
    if (!apply(op, j, n).is_zero()) return false;
  return true;
}

bool verify(const RecurrenceCandidate& c, const JonesSeq& j, long lo, long hi) {
  if (lo <= c.guess_hi && c.guess_lo <= hi)
    throw InvalidInput("verify: held-out range overlaps the guessing range");
  return verify(c.op, j, lo, hi);
}

bool verify_mod(const TorusOp& op, const JonesSeq& j, long lo, long hi, std::uint64_t seed, int rounds) {
  if (op.is_zero()) throw InvalidInput("verify: the zero operator is not a candidate");
  if (!j.has_modular()) return verify(op, j, lo, hi);
  modp::Rng rng(seed);
  const int kmax = op.max_l();
  for (int r = 0; r < rounds; ++r) {
    const u64 p = modp::kPrimes[(seed + static_cast<u64>(r)) % modp::kPrimes.size()];
    const u64 tau = 2 + rng.below(p - 3);
    const long top = std::max(0L, hi + kmax);
    const auto vals = j.eval_mod(top, tau, p);
    auto value = [&](long m) -> u64 {
      if (m >= 0) return vals[static_cast<std::size_t>(m)];
      if (j.knot_symmetry()) return modp::sub(0, vals[static_cast<std::size_t>(-m)], p);
      return j(m).eval_mod(tau, p);
    };
    for (long n = lo; n <= hi; ++n) {
      u64 sum = 0;
      for (const auto& [k, a] : op.coeffs()) {
        u64 coef = 0;
        for (const auto& [key, c] : a.terms()) {
          u64 mono = modp::pow(tau, static_cast<long long>(key.first) + 2LL * n * key.second, p);
          coef = modp::add(coef, modp::mul(modp::reduce(c, p), mono, p), p);
        }
        sum = modp::add(sum, modp::mul(coef, value(n + k), p), p);
      }
      if (sum != 0) return false;
    }
  }
  return true;
}

TorusOp normalize_op(const TorusOp& op) {
  if (op.is_zero()) throw InvalidInput("normalize_op: zero operator");
  std::vector<int> ks;
  std::vector<PolyTM> cs;
  for (const auto& [k, a] : op.coeffs()) {
    ks.push_back(k);
    cs.push_back(a);
  }
  auto norm = content_normalize(cs);
  TorusOp out;
  for (std::size_t i = 0; i < ks.size(); ++i) out.add_term(norm[i], ks[i]);
  return out;
}

CommPoly epsilon_reduce(const TorusOp& op) {
  CommPoly out;
  for (const auto& [k, a] : op.coeffs())
    for (const auto& [key, c] : a.terms()) out.add_term(k, key.second, (key.first % 2 != 0) ? Rat(-c) : Rat(c));
  return out.cleared();
}

TorusOp cable_factor(int r) {
  if (r % 2 == 0) throw InvalidInput("cable factor: r must be odd");
  return TorusOp::term(PolyTM::monomial(1, 0, r), 1) + TorusOp::term(PolyTM::monomial(1, -2 * r, -r), 0);
}

TorusOp cable_factorize(const TorusOp& alpha_odd, int r) { return alpha_odd * cable_factor(r); }

namespace {

bool unit_monomial(const PolyTM& p) {
  return p.size() == 1 && (p.terms().begin()->second == 1 || p.terms().begin()->second == -1);
}

PolyTM monomial_inverse(const PolyTM& p) {
  const auto& [key, c] = *p.terms().begin();
  return PolyTM::monomial(c, -key.first, -key.second);
}

PolyTM exact_quotient(const PolyTM& a, const PolyTM& b) {
  PolyTM q;
  if (!poly_divide(a, b, q)) throw std::logic_error("left_divide: inexact coefficient division");
  return q;
}

PolyTM laurent_gcd(const PolyTM& a, const PolyTM& b) {
  return poly_gcd(a.shifted(-a.min_t(), -a.min_m()), b.shifted(-b.min_t(), -b.min_m()));
}

}  // namespace

LeftDivision left_divide(const TorusOp& a, const TorusOp& b) {
  if (b.is_zero()) throw InvalidInput("left_divide: division by the zero operator");
  LeftDivision out;
  out.denominator = PolyTM(1);
  out.remainder = a;
  const int m = b.max_l();
  const PolyTM& lc = b.coeff(m);
  const bool fast = unit_monomial(lc);
  while (!out.remainder.is_zero() && out.remainder.max_l() >= m) {
    const int top = out.remainder.max_l();
    const int i = top - m;
    const PolyTM a_top = out.remainder.coeff(top);
    const PolyTM s = lc.scale_m(2 * i);
    if (fast) {
      PolyTM q = a_top * monomial_inverse(s);
      out.quotient.add_term(q, i);
      out.remainder -= TorusOp::term(q, i) * b;
    } else {
      PolyTM g = laurent_gcd(a_top, s);
      PolyTM mult = exact_quotient(s, g);
      PolyTM q = exact_quotient(a_top, g);
      out.remainder = out.remainder.left_scaled(mult) - TorusOp::term(q, i) * b;
      out.quotient = out.quotient.left_scaled(mult) + TorusOp::term(q, i);
      out.denominator = mult * out.denominator;
    }
  }
  return out;
}

}  // namespace ajc
