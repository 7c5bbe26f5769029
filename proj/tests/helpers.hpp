#pragma once

#include <random>

#include "ajc/apoly.hpp"
#include "ajc/laurent.hpp"
#include "ajc/qtorus.hpp"

namespace ajc::test {

inline LaurentT T(int e, long c = 1) { return LaurentT::monomial(Int(c), e); }
inline PolyTM TM(int te, int me, long c = 1) { return PolyTM::monomial(Int(c), te, me); }

inline LaurentT random_laurent(std::mt19937_64& rng, int span = 6, int terms = 4) {
  std::uniform_int_distribution<int> e(-span, span), c(-5, 5);
  std::vector<LaurentT::Term> t;
  for (int i = 0; i < terms; ++i) t.emplace_back(e(rng), Int(c(rng)));
  return LaurentT::from_terms(std::move(t));
}

inline PolyTM random_polytm(std::mt19937_64& rng, int tspan = 4, int mdeg = 3, int terms = 3) {
  std::uniform_int_distribution<int> te(-tspan, tspan), me(0, mdeg), c(-4, 4);
  PolyTM p;
  for (int i = 0; i < terms; ++i) p.add_term(te(rng), me(rng), Int(c(rng)));
  return p;
}

inline TorusOp random_op(std::mt19937_64& rng, int ldeg = 2, int mdeg = 3, int lmin = 0) {
  TorusOp op;
  for (int k = lmin; k <= ldeg; ++k) op.add_term(random_polytm(rng, 4, mdeg), k);
  return op;
}

inline CommPoly random_comm(std::mt19937_64& rng, int ldeg, int mdeg, int terms) {
  std::uniform_int_distribution<int> l(0, ldeg), m(0, mdeg), c(-4, 4);
  CommPoly p;
  for (int i = 0; i < terms; ++i) p.add_term(l(rng), m(rng), Rat(c(rng)));
  return p;
}

}  // namespace ajc::test
