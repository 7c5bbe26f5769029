#include "ajc/jones.hpp"

#include <mutex>
#include <numeric>

#include "ajc/errors.hpp"
#include "ajc/modp.hpp"

namespace ajc {

using modp::u64;

// ---------------------------------------------------------------- JonesSeq

JonesSeq::JonesSeq(std::string label, Exact exact, ModRange modular, bool knot_symmetry)
    : impl_(std::make_shared<Impl>()) {
  impl_->label = std::move(label);
  impl_->exact = std::move(exact);
  impl_->modular = std::move(modular);
  impl_->symmetric = knot_symmetry;
}

LaurentT JonesSeq::operator()(long n) const {
  if (!impl_) throw InvalidInput("empty JonesSeq");
  if (impl_->symmetric) {
    if (n == 0) return LaurentT();
    if (n < 0) return -(*this)(-n);
  }
  {
    std::shared_lock lock(impl_->mu);
    auto it = impl_->cache.find(n);
    if (it != impl_->cache.end()) return it->second;
  }
  LaurentT v = impl_->exact(n);
  std::unique_lock lock(impl_->mu);
  return impl_->cache.try_emplace(n, std::move(v)).first->second;
}

std::vector<u64> JonesSeq::eval_mod(long n_max, u64 tau, u64 p) const {
  if (impl_->modular) return impl_->modular(n_max, tau, p);
  std::vector<u64> out;
  for (long n = 0; n <= n_max; ++n) out.push_back((*this)(n).eval_mod(tau, p));
  return out;
}

std::size_t JonesSeq::cached() const {
  std::shared_lock lock(impl_->mu);
  return impl_->cache.size();
}

// ---------------------------------------------------------------- closed forms

LaurentT jones_unknot(long n) { return LaurentT::qint(n); }

LaurentT jones_torus(int p, int q, long n) {
  if (std::gcd(p, q) != 1) throw InvalidInput("jones_torus: p and q must be coprime");
  if (p == 0 || q == 0) throw InvalidInput("jones_torus: p and q must be nonzero");
  if (n == 0) return LaurentT();
  if (n < 0) return -jones_torus(p, q, -n);
  // with K = 2k running over -(n-1), -(n-3), ..., n-1:
  // J(n) = t^{-pq(n^2-1)} sum_K t^{pq K^2 + 2qK} [pK + 1]
  const long pq = static_cast<long>(p) * q;
  LaurentT sum;
  for (long K = -(n - 1); K <= n - 1; K += 2)
    sum += LaurentT::qint(p * K + 1).shifted(static_cast<int>(pq * K * K + 2L * q * K));
  return sum.shifted(static_cast<int>(-pq * (n * n - 1)));
}

namespace {

// Polynomials in q are carried as LaurentT in the variable q and converted with q = t^{-4}.
LaurentT q_mono(long e, long c = 1) { return LaurentT::monomial(Int(c), static_cast<int>(e)); }
LaurentT one_minus_q(long e) { return LaurentT(1) - q_mono(e); }

LaurentT qpoch_range(long from, long to) {  // prod_{i=from}^{to} (1 - q^i)
  LaurentT r(1);
  for (long i = from; i <= to; ++i) r = r * one_minus_q(i);
  return r;
}

struct TwistCache {
  std::mutex mu;
  std::map<std::pair<int, long>, LaurentT> f;
};

TwistCache& twist_cache() {
  static TwistCache c;
  return c;
}

// Cyclotomic coefficient f_{m,k} of the twist knot K_m, in the variable q.
LaurentT twist_f(int m, long k) {
  if (m == -1) return q_mono(-k * (k + 1) / 2, (k % 2 == 0) ? 1 : -1);
  if (m == 0) return k == 0 ? LaurentT(1) : LaurentT();
  {
    std::lock_guard lock(twist_cache().mu);
    auto it = twist_cache().f.find({m, k});
    if (it != twist_cache().f.end()) return it->second;
  }
  // f = q^k sum_l (-1)^l q^{l(l+1)m + l(l-1)/2} (1 - q^{2l+1}) (q;q)_k / ((q;q)_{k+l+1} (q;q)_{k-l}),
  // computed over the common denominator (q;q)_{2k+1}.
  LaurentT num;
  for (long l = 0; l <= k; ++l) {
    LaurentT term = q_mono(l * (l + 1) * m + l * (l - 1) / 2, (l % 2 == 0) ? 1 : -1) * one_minus_q(2 * l + 1);
    term = term * qpoch_range(k + l + 2, 2 * k + 1) * qpoch_range(k - l + 1, k);
    num += term;
  }
  LaurentT den = qpoch_range(1, 2 * k + 1);
  LaurentT f;
  if (!num.divides_into(den, f)) throw std::logic_error("twist_f: inexact cyclotomic coefficient");
  f = f.shifted(static_cast<int>(k));
  std::lock_guard lock(twist_cache().mu);
  twist_cache().f.emplace(std::make_pair(m, k), f);
  return f;
}

}  // namespace

LaurentT jones_twist(int m, long n) {
  if (n == 0) return LaurentT();
  if (n < 0) return -jones_twist(m, -n);
  LaurentT sum;
  LaurentT prod(1);  // (q^{1+n}; q)_k (q^{1-n}; q)_k
  for (long k = 0; k < n; ++k) {
    if (k > 0) prod = prod * one_minus_q(n + k) * one_minus_q(k - n);
    sum += twist_f(m, k) * prod;
  }
  return sum.subst_power(-4) * LaurentT::qint(n);
}

// ---------------------------------------------------------------- modular evaluators

namespace {

struct ModCtx {
  u64 p, tau, tau_inv;
  u64 pw(long long e) const { return e >= 0 ? modp::pow(tau, e, p) : modp::pow(tau_inv, -e, p); }
};

// [m] at t = tau for m in 0..m_max via [m+1] = (t^2 + t^{-2})[m] - [m-1].
std::vector<u64> qints(long m_max, const ModCtx& c) {
  std::vector<u64> q(static_cast<std::size_t>(std::max(2L, m_max + 1)), 0);
  q[1] = 1;
  u64 z = modp::add(c.pw(2), c.pw(-2), c.p);
  for (long m = 1; m < m_max; ++m)
    q[static_cast<std::size_t>(m + 1)] = modp::sub(modp::mul(z, q[static_cast<std::size_t>(m)], c.p), q[static_cast<std::size_t>(m - 1)], c.p);
  return q;
}

u64 qint_signed(const std::vector<u64>& q, long m, u64 p) {
  return m >= 0 ? q[static_cast<std::size_t>(m)] : modp::sub(0, q[static_cast<std::size_t>(-m)], p);
}

std::vector<u64> torus_mod(int p_, int q_, long n_max, u64 tau, u64 p) {
  ModCtx c{p, tau, modp::inv(tau, p)};
  long pa = std::abs(p_);
  auto qi = qints(pa * n_max + 2, c);
  const long pq = static_cast<long>(p_) * q_;
  std::vector<u64> out(static_cast<std::size_t>(n_max + 1), 0);
  for (long n = 1; n <= n_max; ++n) {
    u64 s = 0;
    for (long K = -(n - 1); K <= n - 1; K += 2)
      s = modp::add(s, modp::mul(qint_signed(qi, p_ * K + 1, p), c.pw(pq * K * K + 2L * q_ * K), p), p);
    out[static_cast<std::size_t>(n)] = modp::mul(s, c.pw(-pq * (n * n - 1)), p);
  }
  return out;
}

std::vector<u64> twist_mod(int m, long n_max, u64 tau, u64 p) {
  ModCtx c{p, tau, modp::inv(tau, p)};
  const u64 qq = c.pw(-4);
  const u64 qinv = c.pw(4);
  auto qpow = [&](long long e) { return e >= 0 ? modp::pow(qq, e, p) : modp::pow(qinv, -e, p); };
  auto qi = qints(n_max + 1, c);
  // f_{m,k} for k < n_max
  std::vector<u64> f(static_cast<std::size_t>(std::max(1L, n_max)), 0);
  if (m == -1) {
    for (long k = 0; k < n_max; ++k) f[static_cast<std::size_t>(k)] = modp::mul(qpow(-k * (k + 1) / 2), (k % 2 == 0) ? 1 : p - 1, p);
  } else if (m == 0) {
    f[0] = 1;
  } else {
    std::vector<u64> poch(static_cast<std::size_t>(2 * n_max + 2), 1);  // (q;q)_i
    for (long i = 1; i < static_cast<long>(poch.size()); ++i)
      poch[static_cast<std::size_t>(i)] = modp::mul(poch[static_cast<std::size_t>(i - 1)], modp::sub(1, qpow(i), p), p);
    for (long k = 0; k < n_max; ++k) {
      u64 s = 0;
      for (long l = 0; l <= k; ++l) {
        u64 t = modp::mul(qpow(l * (l + 1) * m + l * (l - 1) / 2), modp::sub(1, qpow(2 * l + 1), p), p);
        t = modp::mul(t, poch[static_cast<std::size_t>(k)], p);
        t = modp::mul(t, modp::inv(modp::mul(poch[static_cast<std::size_t>(k + l + 1)], poch[static_cast<std::size_t>(k - l)], p), p), p);
        s = (l % 2 == 0) ? modp::add(s, t, p) : modp::sub(s, t, p);
      }
      f[static_cast<std::size_t>(k)] = modp::mul(s, qpow(k), p);
    }
  }
  std::vector<u64> out(static_cast<std::size_t>(n_max + 1), 0);
  for (long n = 1; n <= n_max; ++n) {
    u64 sum = 0, prod = 1;
    for (long k = 0; k < n; ++k) {
      if (k > 0) prod = modp::mul(prod, modp::mul(modp::sub(1, qpow(n + k), p), modp::sub(1, qpow(k - n), p), p), p);
      sum = modp::add(sum, modp::mul(f[static_cast<std::size_t>(k)], prod, p), p);
    }
    out[static_cast<std::size_t>(n)] = modp::mul(sum, qi[static_cast<std::size_t>(n)], p);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- sequences

JonesSeq unknot_seq() {
  return JonesSeq(
      "unknot", [](long n) { return jones_unknot(n); },
      [](long n_max, u64 tau, u64 p) {
        ModCtx c{p, tau, modp::inv(tau, p)};
        auto q = qints(n_max, c);
        q.resize(static_cast<std::size_t>(n_max + 1));
        return q;
      },
      true);
}

JonesSeq torus_seq(int p, int q) {
  if (std::gcd(p, q) != 1) throw InvalidInput("torus_seq: p and q must be coprime");
  return JonesSeq(
      "T(" + std::to_string(p) + "," + std::to_string(q) + ")", [p, q](long n) { return jones_torus(p, q, n); },
      [p, q](long n_max, u64 tau, u64 pr) { return torus_mod(p, q, n_max, tau, pr); }, true);
}

JonesSeq twist_seq(int m) {
  return JonesSeq(
      "twist(" + std::to_string(m) + ")", [m](long n) { return jones_twist(m, n); },
      [m](long n_max, u64 tau, u64 p) { return twist_mod(m, n_max, tau, p); }, true);
}

JonesSeq oracle_seq(const KnotDiagram& d, std::string label) {
  return JonesSeq(std::move(label), [d](long n) { return jones_bracket_oracle(d, n); }, {}, true);
}

JonesSeq mirror_seq(const JonesSeq& j) {
  JonesSeq::ModRange mod;
  if (j.has_modular())
    mod = [j](long n_max, u64 tau, u64 p) { return j.eval_mod(n_max, modp::inv(tau, p), p); };
  return JonesSeq(
      "mirror(" + j.label() + ")", [j](long n) { return j(n).subst_power(-1); }, mod, j.knot_symmetry());
}

JonesSeq cable_jones(const JonesSeq& j, int r) {
  if (r % 2 == 0) throw InvalidInput("cable_jones: r must be odd");
  auto exact = [j, r](long n) {
    // t^{-2r(n^2-1)} sum_{k=1}^{n} (-1)^{r(n-k)} t^{2rk(k-1)} J(2k-1)
    LaurentT s;
    for (long k = 1; k <= n; ++k) {
      LaurentT term = j(2 * k - 1).shifted(static_cast<int>(2L * r * k * (k - 1)));
      if (((n - k) % 2) != 0) term = -term;  // r is odd
      s += term;
    }
    return s.shifted(static_cast<int>(-2L * r * (n * n - 1)));
  };
  JonesSeq::ModRange mod = [j, r](long n_max, u64 tau, u64 p) {
    std::vector<u64> base = j.eval_mod(std::max(1L, 2 * n_max - 1), tau, p);
    ModCtx c{p, tau, modp::inv(tau, p)};
    std::vector<u64> out(static_cast<std::size_t>(n_max + 1), 0);
    u64 s = 0;  // S(n) = -S(n-1) + t^{2rn(n-1)} J(2n-1)
    for (long n = 1; n <= n_max; ++n) {
      s = modp::add(modp::sub(0, s, p), modp::mul(c.pw(2L * r * n * (n - 1)), base[static_cast<std::size_t>(2 * n - 1)], p), p);
      out[static_cast<std::size_t>(n)] = modp::mul(s, c.pw(-2L * r * (n * n - 1)), p);
    }
    return out;
  };
  return JonesSeq("cable(" + j.label() + "," + std::to_string(r) + ")", exact, mod, true);
}

JonesSeq odd_part(const JonesSeq& j) {
  JonesSeq::ModRange mod = [j](long n_max, u64 tau, u64 p) {
    std::vector<u64> base = j.eval_mod(2 * n_max + 1, tau, p);
    std::vector<u64> out(static_cast<std::size_t>(n_max + 1));
    for (long n = 0; n <= n_max; ++n) out[static_cast<std::size_t>(n)] = base[static_cast<std::size_t>(2 * n + 1)];
    return out;
  };
  return JonesSeq("odd(" + j.label() + ")", [j](long n) { return j(2 * n + 1); }, mod, false);
}

}  // namespace ajc
