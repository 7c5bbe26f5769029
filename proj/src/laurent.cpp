#include "ajc/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ajc/errors.hpp"
#include "ajc/modp.hpp"
#include "ajc/zpoly.hpp"

namespace ajc {

LaurentT::LaurentT(long c) {
  if (c != 0) terms_.emplace_back(0, Int(c));
}

LaurentT::LaurentT(const Int& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

LaurentT LaurentT::monomial(const Int& c, int e) {
  LaurentT r;
  if (c != 0) r.terms_.emplace_back(e, c);
  return r;
}

LaurentT LaurentT::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentT r;
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
      if (r.terms_.back().second == 0) r.terms_.pop_back();
    } else if (t.second != 0) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

LaurentT LaurentT::qint(long m) {
  if (m == 0) return LaurentT();
  long a = m < 0 ? -m : m;
  LaurentT r;
  for (long k = 0; k < a; ++k) r.terms_.emplace_back(static_cast<int>(-2 * (a - 1) + 4 * k), Int(m < 0 ? -1 : 1));
  return r;
}

int LaurentT::min_exp() const {
  if (is_zero()) throw DegreeUndefined("degree of the zero polynomial");
  return terms_.front().first;
}

int LaurentT::max_exp() const {
  if (is_zero()) throw DegreeUndefined("degree of the zero polynomial");
  return terms_.back().first;
}

Int LaurentT::coeff(int e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, int x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

LaurentT LaurentT::operator-() const {
  LaurentT r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

std::vector<LaurentT::Term> merge(const std::vector<LaurentT::Term>& a, const std::vector<LaurentT::Term>& b,
                                  bool negate_b) {
  std::vector<LaurentT::Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.emplace_back(b[j].first, negate_b ? Int(-b[j].second) : b[j].second);
      ++j;
    } else {
      Int c = negate_b ? Int(a[i].second - b[j].second) : Int(a[i].second + b[j].second);
      if (c != 0) r.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

LaurentT& LaurentT::operator+=(const LaurentT& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

LaurentT& LaurentT::operator-=(const LaurentT& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

LaurentT& LaurentT::operator*=(const LaurentT& o) {
  *this = *this * o;
  return *this;
}

LaurentT operator*(const LaurentT& a, const LaurentT& b) {
  if (a.is_zero() || b.is_zero()) return LaurentT();
  long lo = static_cast<long>(a.min_exp()) + b.min_exp();
  long span = static_cast<long>(a.max_exp()) + b.max_exp() - lo + 1;
  LaurentT r;
  if (span <= 8 * static_cast<long>(a.size() * b.size()) + 64) {
    std::vector<Int> acc(static_cast<std::size_t>(span));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        mpz_addmul(acc[static_cast<std::size_t>(ea + eb - lo)].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    for (long k = 0; k < span; ++k)
      if (acc[static_cast<std::size_t>(k)] != 0)
        r.terms_.emplace_back(static_cast<int>(k + lo), std::move(acc[static_cast<std::size_t>(k)]));
    return r;
  }
  std::map<int, Int> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) mpz_addmul(acc[ea + eb].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.emplace_back(e, std::move(c));
  return r;
}

LaurentT LaurentT::shifted(int k) const {
  LaurentT r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

LaurentT LaurentT::scaled(const Int& c) const {
  if (c == 0) return LaurentT();
  LaurentT r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

LaurentT LaurentT::subst_power(int k) const {
  if (k == 0) throw InvalidInput("subst_power: exponent 0");
  std::vector<Term> out = terms_;
  for (auto& t : out) t.first *= k;
  return from_terms(std::move(out));
}

LaurentT LaurentT::pow(unsigned e) const {
  LaurentT r(1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool LaurentT::divides_into(const LaurentT& b, LaurentT& quotient) const {
  if (b.is_zero()) throw InvalidInput("division by the zero polynomial");
  if (is_zero()) {
    quotient = LaurentT();
    return true;
  }
  int shift_a = min_exp(), shift_b = b.min_exp();
  ZPoly pa, pb, q;
  pa.c.resize(static_cast<std::size_t>(max_exp() - shift_a + 1));
  for (const auto& [e, c] : terms_) pa.c[static_cast<std::size_t>(e - shift_a)] = c;
  pb.c.resize(static_cast<std::size_t>(b.max_exp() - shift_b + 1));
  for (const auto& [e, c] : b.terms_) pb.c[static_cast<std::size_t>(e - shift_b)] = c;
  if (!exact_divide(pa, pb, q)) return false;
  std::vector<Term> out;
  for (std::size_t i = 0; i < q.c.size(); ++i)
    if (q.c[i] != 0) out.emplace_back(static_cast<int>(i) + shift_a - shift_b, q.c[i]);
  quotient = from_terms(std::move(out));
  return true;
}

std::uint64_t LaurentT::eval_mod(std::uint64_t tau, std::uint64_t p) const {
  std::uint64_t acc = 0;
  if (is_zero()) return 0;
  // Horner over the exponent gaps, starting from the top term.
  std::uint64_t inv_tau = modp::inv(tau, p);
  for (std::size_t i = terms_.size(); i-- > 0;) {
    acc = modp::add(acc, modp::reduce(terms_[i].second, p), p);
    if (i > 0) acc = modp::mul(acc, modp::pow(tau, terms_[i].first - terms_[i - 1].first, p), p);
  }
  int e0 = terms_.front().first;
  return modp::mul(acc, e0 >= 0 ? modp::pow(tau, e0, p) : modp::pow(inv_tau, -static_cast<long long>(e0), p), p);
}

namespace {

void append_monomial(std::ostringstream& os, bool first, const Int& c, const std::string& mono) {
  Int a = abs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (mono.empty()) {
    os << a.get_str();
  } else {
    if (a != 1) os << a.get_str() << "*";
    os << mono;
  }
}

std::string power(const char* var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

std::string LaurentT::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    append_monomial(os, first, it->second, power("t", it->first));
    first = false;
  }
  return os.str();
}

LaurentT lt_add(const LaurentT& a, const LaurentT& b) { return a + b; }
LaurentT lt_mul(const LaurentT& a, const LaurentT& b) { return a * b; }
LaurentT lt_neg(const LaurentT& a) { return -a; }

bool DegQ::quarter_integral() const {
  mpz_class d = v_.get_den();
  return d == 1 || d == 2 || d == 4;
}

DegQ d_plus(const LaurentT& f) {
  if (f.is_zero()) throw DegreeUndefined("d_plus of the zero polynomial");
  return DegQ(frac(-f.min_exp(), 4));
}

DegQ d_minus(const LaurentT& f) {
  if (f.is_zero()) throw DegreeUndefined("d_minus of the zero polynomial");
  return DegQ(frac(-f.max_exp(), 4));
}

// ---------------------------------------------------------------- PolyTM

PolyTM::PolyTM(long c) {
  if (c != 0) terms_[{0, 0}] = c;
}

PolyTM PolyTM::monomial(const Int& c, int te, int me) {
  PolyTM r;
  if (c != 0) r.terms_[{te, me}] = c;
  return r;
}

PolyTM PolyTM::from_laurent(const LaurentT& f, int me) {
  PolyTM r;
  for (const auto& [e, c] : f.terms()) r.terms_[{e, me}] = c;
  return r;
}

void PolyTM::add_term(int te, int me, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({te, me}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyTM PolyTM::operator-() const {
  PolyTM r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

PolyTM& PolyTM::operator+=(const PolyTM& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

PolyTM& PolyTM::operator-=(const PolyTM& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

PolyTM operator*(const PolyTM& a, const PolyTM& b) {
  PolyTM r;
  if (a.is_zero() || b.is_zero()) return r;
  std::map<PolyTM::Key, Int> acc;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      mpz_addmul(acc[{ka.first + kb.first, ka.second + kb.second}].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  for (auto& [k, c] : acc)
    if (c != 0) r.terms_.emplace(k, std::move(c));
  return r;
}

PolyTM PolyTM::shifted(int te, int me) const {
  PolyTM r;
  for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), Key{k.first + te, k.second + me}, c);
  return r;
}

PolyTM PolyTM::scaled(const Int& c) const {
  if (c == 0) return PolyTM();
  PolyTM r = *this;
  for (auto& [k, v] : r.terms_) v *= c;
  return r;
}

PolyTM PolyTM::scale_m(int s) const { return substitute(1, s, 1); }

PolyTM PolyTM::substitute(int tk, int tm, int mk) const {
  PolyTM r;
  for (const auto& [k, c] : terms_) r.add_term(tk * k.first + tm * k.second, mk * k.second, c);
  return r;
}

LaurentT PolyTM::at_color(long n) const {
  std::vector<LaurentT::Term> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.emplace_back(static_cast<int>(k.first + 2 * n * k.second), c);
  return LaurentT::from_terms(std::move(out));
}

LaurentT PolyTM::m_coeff(int j) const {
  std::vector<LaurentT::Term> out;
  for (const auto& [k, c] : terms_)
    if (k.second == j) out.emplace_back(k.first, c);
  return LaurentT::from_terms(std::move(out));
}

int PolyTM::min_t() const {
  if (is_zero()) throw DegreeUndefined("degree of the zero polynomial");
  return terms_.begin()->first.first;
}

int PolyTM::max_t() const {
  if (is_zero()) throw DegreeUndefined("degree of the zero polynomial");
  return terms_.rbegin()->first.first;
}

int PolyTM::min_m() const {
  if (is_zero()) throw DegreeUndefined("degree of the zero polynomial");
  int m = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) m = std::min(m, k.second);
  return m;
}

int PolyTM::max_m() const {
  if (is_zero()) throw DegreeUndefined("degree of the zero polynomial");
  int m = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) m = std::max(m, k.second);
  return m;
}

std::pair<PolyTM::Key, Int> PolyTM::leading() const {
  if (is_zero()) throw DegreeUndefined("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    const auto& k = it->first;
    const auto& b = best->first;
    if (k.second > b.second || (k.second == b.second && k.first > b.first)) best = it;
  }
  return *best;
}

std::string PolyTM::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::pair<Key, Int>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second > b.first.second;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : ts) {
    std::string mono = power("t", k.first);
    std::string m = power("M", k.second);
    if (!mono.empty() && !m.empty()) mono += "*";
    mono += m;
    append_monomial(os, first, c, mono);
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- gcd and content

namespace {

// Polynomial in M with coefficients in Z[t]; exponents must be nonnegative.
BiPoly to_bipoly(const PolyTM& a) {
  BiPoly r;
  if (a.is_zero()) return r;
  r.resize(static_cast<std::size_t>(a.max_m() + 1));
  for (const auto& [k, c] : a.terms()) {
    auto& z = r[static_cast<std::size_t>(k.second)];
    if (z.c.size() <= static_cast<std::size_t>(k.first)) z.c.resize(static_cast<std::size_t>(k.first + 1));
    z.c[static_cast<std::size_t>(k.first)] = c;
  }
  for (auto& z : r) z.trim();
  return r;
}

PolyTM from_bipoly(const BiPoly& b) {
  PolyTM r;
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t i = 0; i < b[j].c.size(); ++i) r.add_term(static_cast<int>(i), static_cast<int>(j), b[j].c[i]);
  return r;
}

PolyTM swap_vars(const PolyTM& a) {
  PolyTM r;
  for (const auto& [k, c] : a.terms()) r.add_term(k.second, k.first, c);
  return r;
}

// True when the common gcd of the inputs provably has degree 0 in M. Uses one evaluation
// t = tau modulo a prime where every leading M-coefficient survives.
bool m_degree_zero_certified(const std::vector<BiPoly>& ps) {
  for (const auto& p : ps)
    if (p.size() == 1) return true;
  modp::Rng rng(0x5eedULL);
  for (int attempt = 0; attempt < 4; ++attempt) {
    modp::u64 pr = modp::kPrimes[static_cast<std::size_t>(attempt) % modp::kPrimes.size()];
    modp::u64 tau = 2 + rng.below(pr - 3);
    bool ok = true;
    modp::Poly g;
    for (const auto& p : ps) {
      modp::Poly img(p.size());
      for (std::size_t j = 0; j < p.size(); ++j) {
        modp::u64 v = 0;
        for (std::size_t i = p[j].c.size(); i-- > 0;) v = modp::add(modp::mul(v, tau, pr), modp::reduce(p[j].c[i], pr), pr);
        img[j] = v;
      }
      if (img.back() == 0) {
        ok = false;
        break;
      }
      g = g.empty() ? img : modp::gcd(g, img, pr);
      if (modp::degree(g) == 0) return true;
    }
    if (ok) return false;
  }
  return false;
}

}  // namespace

PolyTM poly_gcd(const PolyTM& a, const PolyTM& b) {
  BiPoly g = bigcd(to_bipoly(a), to_bipoly(b));
  return from_bipoly(g);
}

bool poly_divide(const PolyTM& a, const PolyTM& b, PolyTM& q) {
  if (b.is_zero()) throw InvalidInput("poly_divide by zero");
  q = PolyTM();
  if (a.is_zero()) return true;
  int qm_lo = a.min_m() - b.min_m(), qm_hi = a.max_m() - b.max_m();
  int qt_lo = a.min_t() - b.min_t(), qt_hi = a.max_t() - b.max_t();
  if (qm_lo > qm_hi || qt_lo > qt_hi) return false;
  auto [lk, lc] = b.leading();
  PolyTM r = a;
  while (!r.is_zero()) {
    auto [rk, rc] = r.leading();
    int dt = rk.first - lk.first, dm = rk.second - lk.second;
    if (dm < qm_lo || dm > qm_hi || dt < qt_lo || dt > qt_hi) return false;
    if (!mpz_divisible_p(rc.get_mpz_t(), lc.get_mpz_t())) return false;
    Int c = rc / lc;
    q.add_term(dt, dm, c);
    r -= b.shifted(dt, dm).scaled(c);
  }
  return true;
}

std::vector<PolyTM> content_normalize(const std::vector<PolyTM>& coeffs) {
  std::vector<const PolyTM*> nz;
  for (const auto& c : coeffs)
    if (!c.is_zero()) nz.push_back(&c);
  if (nz.empty()) throw InvalidInput("content_normalize: all coefficients are zero");
  int mt = nz[0]->min_t(), mm = nz[0]->min_m();
  for (const auto* c : nz) {
    mt = std::min(mt, c->min_t());
    mm = std::min(mm, c->min_m());
  }
  std::vector<PolyTM> shifted;
  for (const auto& c : coeffs) shifted.push_back(c.shifted(-mt, -mm));

  std::vector<BiPoly> in_m, in_t;
  for (const auto& c : shifted)
    if (!c.is_zero()) {
      in_m.push_back(to_bipoly(c));
      in_t.push_back(to_bipoly(swap_vars(c)));
    }
  bool m_free = m_degree_zero_certified(in_m);
  bool t_free = m_degree_zero_certified(in_t);

  PolyTM g;
  if (m_free && t_free) {
    Int ig = 0;
    for (const auto& c : shifted)
      for (const auto& [k, v] : c.terms()) mpz_gcd(ig.get_mpz_t(), ig.get_mpz_t(), v.get_mpz_t());
    g = PolyTM::monomial(ig, 0, 0);
  } else if (m_free || t_free) {
    // gcd lives in one variable: combine the univariate coefficient slices
    const auto& slices = m_free ? in_m : in_t;
    ZPoly z;
    for (const auto& p : slices)
      for (const auto& s : p) z = gcd(z, s);
    BiPoly wrapped{z};
    g = m_free ? from_bipoly(wrapped) : swap_vars(from_bipoly(wrapped));
  } else {
    BiPoly acc;
    for (const auto& p : in_m) acc = bigcd(acc, p);
    g = from_bipoly(acc);
  }

  std::vector<PolyTM> out;
  out.reserve(shifted.size());
  for (const auto& c : shifted) {
    PolyTM q;
    if (!poly_divide(c, g, q)) throw std::logic_error("content_normalize: gcd does not divide");
    out.push_back(std::move(q));
  }
  const PolyTM* last = nullptr;
  for (const auto& c : out)
    if (!c.is_zero()) last = &c;
  if (last->leading().second < 0)
    for (auto& c : out) c = -c;
  return out;
}

}  // namespace ajc
