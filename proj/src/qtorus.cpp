#include "ajc/qtorus.hpp"

#include <numeric>
#include <sstream>

#include "ajc/errors.hpp"
#include "ajc/jones.hpp"

namespace ajc {

TorusOp::TorusOp(long c) {
  if (c != 0) coeffs_[0] = PolyTM(c);
}

TorusOp TorusOp::term(const PolyTM& a, int k) {
  TorusOp r;
  r.add_term(a, k);
  return r;
}

const PolyTM& TorusOp::coeff(int k) const {
  static const PolyTM zero;
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? zero : it->second;
}

void TorusOp::add_term(const PolyTM& a, int k) {
  if (a.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(k, a);
  if (!inserted) {
    it->second += a;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

int TorusOp::min_l() const {
  if (is_zero()) throw DegreeUndefined("L-degree of the zero operator");
  return coeffs_.begin()->first;
}

int TorusOp::max_l() const {
  if (is_zero()) throw DegreeUndefined("L-degree of the zero operator");
  return coeffs_.rbegin()->first;
}

std::size_t TorusOp::term_count() const {
  std::size_t n = 0;
  for (const auto& [k, a] : coeffs_) n += a.size();
  return n;
}

TorusOp TorusOp::operator-() const {
  TorusOp r = *this;
  for (auto& [k, a] : r.coeffs_) a = -a;
  return r;
}

TorusOp& TorusOp::operator+=(const TorusOp& o) {
  for (const auto& [k, a] : o.coeffs_) add_term(a, k);
  return *this;
}

TorusOp& TorusOp::operator-=(const TorusOp& o) {
  for (const auto& [k, a] : o.coeffs_) add_term(-a, k);
  return *this;
}

TorusOp operator*(const TorusOp& a, const TorusOp& b) {
  TorusOp r;
  for (const auto& [i, ai] : a.coeffs_)
    for (const auto& [k, bk] : b.coeffs_) r.add_term(ai * bk.scale_m(2 * i), i + k);
  return r;
}

TorusOp top_mul(const TorusOp& a, const TorusOp& b) { return a * b; }

TorusOp TorusOp::left_scaled(const PolyTM& s) const {
  TorusOp r;
  for (const auto& [k, a] : coeffs_) r.add_term(s * a, k);
  return r;
}

TorusOp TorusOp::map_coeffs(const std::function<PolyTM(const PolyTM&)>& f) const {
  TorusOp r;
  for (const auto& [k, a] : coeffs_) r.add_term(f(a), k);
  return r;
}

std::string TorusOp::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, a] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << a.to_string() << ")";
    if (k == 1)
      os << "*L";
    else if (k != 0)
      os << "*L^" << k;
  }
  return os.str();
}

LaurentT apply(const TorusOp& op, const std::function<LaurentT(long)>& f, long n) {
  LaurentT r;
  for (const auto& [k, a] : op.coeffs()) {
    LaurentT v = f(n + k);
    if (v.is_zero()) continue;
    r += a.at_color(n) * v;
  }
  return r;
}

LaurentT apply(const TorusOp& op, const JonesSeq& f, long n) {
  return apply(op, [&f](long m) { return f(m); }, n);
}

TorusOp sigma(const TorusOp& op) {
  TorusOp r;
  for (const auto& [k, a] : op.coeffs()) r.add_term(a.substitute(1, 0, -1), -k);
  return r;
}

TorusOp fg_basis(int k, int l) {
  if (std::gcd(k, l) != 1) throw InvalidInput("fg_basis: (k, l) must be coprime");
  Int sign = ((k + l) % 2 == 0) ? 1 : -1;
  TorusOp r;
  r.add_term(PolyTM::monomial(sign, k * l, k), l);
  r.add_term(PolyTM::monomial(sign, k * l, -k), -l);
  return r;
}

EvenOp EvenOp::term(const PolyTM& a, int k) {
  EvenOp r;
  r.add_term(a, k);
  return r;
}

void EvenOp::add_term(const PolyTM& a, int k) {
  if (a.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(k, a);
  if (!inserted) {
    it->second += a;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

EvenOp operator*(const EvenOp& a, const EvenOp& b) {
  EvenOp r;
  for (const auto& [i, ai] : a.coeffs_)
    for (const auto& [k, bk] : b.coeffs_) r.add_term(ai * bk.scale_m(4 * i), i + k);
  return r;
}

EvenOp operator+(EvenOp a, const EvenOp& b) {
  for (const auto& [k, c] : b.coeffs_) a.add_term(c, k);
  return a;
}

TorusOp embed_even(const EvenOp& p) {
  TorusOp r;
  for (const auto& [k, a] : p.coeffs()) r.add_term(a, 2 * k);
  return r;
}

std::pair<TorusOp, TorusOp> even_substitute(const EvenOp& p) {
  TorusOp odd;
  for (const auto& [k, a] : p.coeffs()) odd.add_term(a.substitute(1, 2, 2), k);
  return {embed_even(p), odd};
}

}  // namespace ajc
