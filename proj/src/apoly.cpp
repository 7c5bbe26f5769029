#include "ajc/apoly.hpp"

#include <algorithm>
#include <sstream>

#include "ajc/errors.hpp"

namespace ajc {

CommPoly::CommPoly(long c) {
  if (c != 0) terms_[{0, 0}] = c;
}

CommPoly CommPoly::monomial(const Rat& c, int l, int m) {
  CommPoly p;
  p.add_term(l, m, c);
  return p;
}

CommPoly CommPoly::from_terms(const std::vector<std::tuple<int, int, Rat>>& terms) {
  CommPoly p;
  for (const auto& [l, m, c] : terms) p.add_term(l, m, c);
  return p;
}

void CommPoly::add_term(int l, int m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({l, m}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat CommPoly::coeff(int l, int m) const {
  auto it = terms_.find({l, m});
  return it == terms_.end() ? Rat(0) : it->second;
}

namespace {

void require_nonzero(const CommPoly& p, const char* what) {
  if (p.is_zero()) throw DegreeUndefined(std::string(what) + ": zero polynomial");
}

}  // namespace

int CommPoly::min_l() const {
  require_nonzero(*this, "min_l");
  return terms_.begin()->first.first;
}

int CommPoly::max_l() const {
  require_nonzero(*this, "max_l");
  return terms_.rbegin()->first.first;
}

int CommPoly::min_m() const {
  require_nonzero(*this, "min_m");
  int m = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) m = std::min(m, k.second);
  return m;
}

int CommPoly::max_m() const {
  require_nonzero(*this, "max_m");
  int m = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) m = std::max(m, k.second);
  return m;
}

CommPoly CommPoly::l_coeff(int k) const {
  CommPoly out;
  for (auto it = terms_.lower_bound({k, INT32_MIN}); it != terms_.end() && it->first.first == k; ++it)
    out.terms_[{0, it->first.second}] = it->second;
  return out;
}

CommPoly CommPoly::operator-() const {
  CommPoly out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  CommPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

CommPoly CommPoly::shifted(int l, int m) const {
  CommPoly out;
  for (const auto& [k, c] : terms_) out.terms_[{k.first + l, k.second + m}] = c;
  return out;
}

CommPoly CommPoly::scaled(const Rat& s) const {
  if (s == 0) return {};
  CommPoly out = *this;
  for (auto& [k, c] : out.terms_) c *= s;
  return out;
}

CommPoly CommPoly::pow(unsigned e) const {
  CommPoly out(1), base = *this;
  while (e) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return out;
}

CommPoly CommPoly::sign_sub(int sl, int sm) const {
  CommPoly out;
  for (const auto& [k, c] : terms_) {
    bool neg = (sl < 0 && (k.first & 1)) != (sm < 0 && (k.second & 1));
    out.terms_[k] = neg ? Rat(-c) : c;
  }
  return out;
}

CommPoly CommPoly::m_power(int e) const {
  if (e == 0) throw InvalidInput("m_power: exponent must be nonzero");
  CommPoly out;
  for (const auto& [k, c] : terms_) out.terms_[{k.first, k.second * e}] = c;
  return out;
}

CommPoly CommPoly::l_reversed() const {
  if (is_zero()) return {};
  const int top = max_l();
  CommPoly out;
  for (const auto& [k, c] : terms_) out.terms_[{top - k.first, k.second}] = c;
  return out;
}

CommPoly CommPoly::at_l(const Rat& v) const {
  CommPoly out;
  for (const auto& [k, c] : terms_) {
    Rat f = 1;
    if (k.first >= 0) {
      mpz_pow_ui(f.get_num_mpz_t(), v.get_num_mpz_t(), static_cast<unsigned long>(k.first));
      mpz_pow_ui(f.get_den_mpz_t(), v.get_den_mpz_t(), static_cast<unsigned long>(k.first));
    } else {
      if (v == 0) throw InvalidInput("at_l: negative L-power at L = 0");
      mpz_pow_ui(f.get_num_mpz_t(), v.get_den_mpz_t(), static_cast<unsigned long>(-k.first));
      mpz_pow_ui(f.get_den_mpz_t(), v.get_num_mpz_t(), static_cast<unsigned long>(-k.first));
    }
    f.canonicalize();
    out.add_term(0, k.second, c * f);
  }
  return out;
}

CommPoly CommPoly::cleared() const {
  if (is_zero()) return {};
  const int l0 = min_l(), m0 = min_m();
  CommPoly out = shifted(-l0, -m0);
  out.unit_l = unit_l + l0;
  out.unit_m = unit_m + m0;
  return out;
}

CommPoly CommPoly::normalized() const {
  if (is_zero()) return {};
  CommPoly out = cleared();
  Int den = 1, num = 0;
  for (const auto& [k, c] : out.terms_) {
    den = lcm(den, Int(c.get_den()));
    num = gcd(num, Int(c.get_num()));
  }
  Rat s(den, num);
  s.canonicalize();
  // leading term: max L, then max M; the map's last entry
  if (out.terms_.rbegin()->second < 0) s = -s;
  for (auto& [k, c] : out.terms_) c *= s;
  return out;
}

namespace {

std::string monomial_str(int l, int m) {
  std::string s;
  auto var = [&](const char* v, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += v;
    if (e != 1) s += "^" + std::to_string(e);
  };
  var("L", l);
  var("M", m);
  return s;
}

}  // namespace

std::string CommPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string mono = monomial_str(k.first, k.second);
    Rat a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << mono;
    }
  }
  return os.str();
}

bool comm_divide(const CommPoly& a, const CommPoly& b, CommPoly& q) {
  if (b.is_zero()) throw InvalidInput("comm_divide: division by zero");
  q = CommPoly();
  if (a.is_zero()) return true;
  const int bl = b.min_l(), bm = b.min_m();
  const int al = a.min_l(), am = a.min_m();
  CommPoly bb = b.shifted(-bl, -bm);
  CommPoly r = a.shifted(-al, -am);
  const auto lead_b = *bb.terms().rbegin();
  CommPoly acc;
  while (!r.is_zero()) {
    const auto lead_r = *r.terms().rbegin();
    int dl = lead_r.first.first - lead_b.first.first;
    int dm = lead_r.first.second - lead_b.first.second;
    if (dl < 0 || dm < 0) return false;
    CommPoly term = CommPoly::monomial(lead_r.second / lead_b.second, dl, dm);
    acc += term;
    r -= term * bb;
  }
  q = acc.shifted(al - bl, am - bm);
  return true;
}

namespace {

using UPoly = std::vector<Rat>;  // coefficients in M, index = exponent

UPoly to_upoly(const CommPoly& p) {
  UPoly u;
  for (const auto& [k, c] : p.terms()) {
    if (k.first != 0 || k.second < 0) throw InvalidInput("gcd_m: expected a polynomial in M alone");
    if (u.size() <= static_cast<std::size_t>(k.second)) u.resize(static_cast<std::size_t>(k.second) + 1);
    u[static_cast<std::size_t>(k.second)] = c;
  }
  return u;
}

void utrim(UPoly& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

}  // namespace

CommPoly gcd_m(const CommPoly& a, const CommPoly& b) {
  UPoly x = to_upoly(a), y = to_upoly(b);
  utrim(x);
  utrim(y);
  while (!y.empty()) {
    UPoly r = x;
    while (r.size() >= y.size() && !r.empty()) {
      Rat f = r.back() / y.back();
      std::size_t off = r.size() - y.size();
      for (std::size_t i = 0; i < y.size(); ++i) r[off + i] -= f * y[i];
      r.pop_back();
      utrim(r);
    }
    x = std::move(y);
    y = std::move(r);
  }
  CommPoly out;
  if (x.empty()) return out;
  Rat lc = x.back();
  for (std::size_t i = 0; i < x.size(); ++i) out.add_term(0, static_cast<int>(i), x[i] / lc);
  return out;
}

LambdaPoly as_lambda(const CommPoly& p) {
  LambdaPoly out;
  for (const auto& [k, c] : p.terms()) {
    if (k.first < 0) throw InvalidInput("as_lambda: negative exponent");
    if (out.size() <= static_cast<std::size_t>(k.first)) out.resize(static_cast<std::size_t>(k.first) + 1);
    out[static_cast<std::size_t>(k.first)].add_term(0, k.second, c);
  }
  return out;
}

namespace {

void ltrim(LambdaPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int ldeg(const LambdaPoly& p) { return static_cast<int>(p.size()) - 1; }

CommPoly exact_div(const CommPoly& a, const CommPoly& b) {
  CommPoly q;
  if (!comm_divide(a, b, q)) throw std::logic_error("resultant: inexact division");
  return q;
}

LambdaPoly scale(const LambdaPoly& p, const CommPoly& s) {
  LambdaPoly out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] * s;
  ltrim(out);
  return out;
}

// lc(b)^{deg a - deg b + 1} a mod b.
LambdaPoly prem(LambdaPoly a, const LambdaPoly& b) {
  int e = ldeg(a) - ldeg(b) + 1;
  const CommPoly& lb = b.back();
  while (!a.empty() && ldeg(a) >= ldeg(b)) {
    CommPoly la = a.back();
    std::size_t off = a.size() - b.size();
    for (auto& c : a) c = c * lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= la * b[i];
    ltrim(a);
    --e;
  }
  if (e > 0) a = scale(a, lb.pow(static_cast<unsigned>(e)));
  return a;
}

}  // namespace

CommPoly resultant(const LambdaPoly& p0, const LambdaPoly& q0) {
  LambdaPoly a = p0, b = q0;
  ltrim(a);
  ltrim(b);
  if (a.empty() || b.empty()) throw InvalidInput("resultant: zero input");
  CommPoly s = 1;
  if (ldeg(a) < ldeg(b)) {
    std::swap(a, b);
    if ((ldeg(a) & 1) && (ldeg(b) & 1)) s = -1;
  }
  if (ldeg(b) == 0) return s * b[0].pow(static_cast<unsigned>(ldeg(a)));
  CommPoly g = 1, h = 1;
  while (true) {
    const int delta = ldeg(a) - ldeg(b);
    if ((ldeg(a) & 1) && (ldeg(b) & 1)) s = -s;
    LambdaPoly r = prem(a, b);
    a = b;
    if (r.empty()) return {};
    CommPoly div = g * h.pow(static_cast<unsigned>(delta));
    b.assign(r.size(), CommPoly());
    for (std::size_t i = 0; i < r.size(); ++i) b[i] = exact_div(r[i], div);
    g = a.back();
    // h <- g^delta / h^(delta - 1)
    if (delta > 0) h = exact_div(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    if (ldeg(b) == 0) {
      const int da = ldeg(a);
      CommPoly num = b[0].pow(static_cast<unsigned>(da));
      CommPoly res = da >= 1 ? exact_div(num, h.pow(static_cast<unsigned>(da - 1))) : num * h;
      return s * res;
    }
  }
}

CommPoly resultant_sylvester(const LambdaPoly& p0, const LambdaPoly& q0) {
  LambdaPoly p = p0, q = q0;
  ltrim(p);
  ltrim(q);
  if (p.empty() || q.empty()) throw InvalidInput("resultant: zero input");
  const int m = ldeg(p), n = ldeg(q);
  const int size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<CommPoly>> a(static_cast<std::size_t>(size), std::vector<CommPoly>(static_cast<std::size_t>(size)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = p[static_cast<std::size_t>(m - k)];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) a[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + k)] = q[static_cast<std::size_t>(n - k)];
  CommPoly prev = 1;
  int sign = 1;
  const auto N = static_cast<std::size_t>(size);
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = c;
    while (piv < N && a[piv][c].is_zero()) ++piv;
    if (piv == N) return {};
    if (piv != c) {
      std::swap(a[piv], a[c]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < N; ++i) {
      for (std::size_t j = c + 1; j < N; ++j) a[i][j] = exact_div(a[c][c] * a[i][j] - a[i][c] * a[c][j], prev);
      a[i][c] = CommPoly();
    }
    prev = a[c][c];
  }
  return a[N - 1][N - 1].scaled(sign);
}

CommPoly r_poly(const CommPoly& a) {
  if (a.is_zero()) throw InvalidInput("r_poly: zero A-polynomial");
  LambdaPoly q = {-CommPoly::L(), CommPoly(), CommPoly(1)};
  return resultant(as_lambda(a.cleared()), q);
}

CommPoly cable_a(const CommPoly& a, int r) {
  if (r % 2 == 0) throw InvalidInput("cable_a: r must be odd");
  CommPoly res = r_poly(a.cleared().m_power(2));
  CommPoly out = (CommPoly::L() - 1) * res * (CommPoly::L() + CommPoly::M(-2 * r));
  return out.cleared();
}

CommPoly b_poly(const CommPoly& a) { return (CommPoly::L() - 1) * a; }

CommPoly c_poly(const CommPoly& r) { return (CommPoly::L() - 1) * r; }

bool even_m_symmetry(const CommPoly& p) { return p.sign_sub(1, -1) == p; }

CommPoly square_sub(const CommPoly& p) { return p.m_power(2); }

bool odd_L_term_exists(const CommPoly& p) {
  return std::any_of(p.terms().begin(), p.terms().end(), [](const auto& kv) { return kv.first.first & 1; });
}

namespace {

using Pt = std::pair<int, int>;

long long cross(const Pt& o, const Pt& a, const Pt& b) {
  return static_cast<long long>(a.first - o.first) * (b.second - o.second) -
         static_cast<long long>(a.second - o.second) * (b.first - o.first);
}

}  // namespace

NewtonPolygon newton_polygon(const CommPoly& p) {
  if (p.is_zero()) throw InvalidInput("newton_polygon: zero polynomial");
  std::vector<Pt> pts;
  for (const auto& [k, c] : p.terms()) pts.push_back(k);
  std::sort(pts.begin(), pts.end());
  NewtonPolygon out;
  if (pts.size() == 1) {
    out.vertices = pts;
    return out;
  }
  // Andrew's monotone chain, dropping collinear points.
  std::vector<Pt> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& pt : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pt) <= 0) --k;
    hull[k++] = pt;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  out.vertices = hull;
  return out;
}

bool NewtonPolygon::contains(std::pair<int, int> pt) const {
  const auto& v = vertices;
  if (v.empty()) return false;
  if (v.size() == 1) return pt == v[0];
  if (v.size() == 2) {
    if (cross(v[0], v[1], pt) != 0) return false;
    return std::min(v[0].first, v[1].first) <= pt.first && pt.first <= std::max(v[0].first, v[1].first) &&
           std::min(v[0].second, v[1].second) <= pt.second && pt.second <= std::max(v[0].second, v[1].second);
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    if (cross(v[i], v[(i + 1) % v.size()], pt) < 0) return false;
  return true;
}

}  // namespace ajc
