#pragma once

#include <random>

#include "mick/ratfn.hpp"

namespace th {

using mick::GaussRat;
using mick::LaurentPoly;
using mick::Monomial;
using mick::RatFn;

inline RatFn qh(int d) { return RatFn::monomial(Monomial::q_half(d)); }
inline RatFn q(int k = 1) { return qh(2 * k); }
inline RatFn t(int k, int pow = 1) { return RatFn::monomial(Monomial::t(k, 2 * pow)); }

inline LaurentPoly random_poly(std::mt19937_64& rng, int vars, int terms) {
  std::uniform_int_distribution<int> coef(-3, 3), ex(-2, 2);
  std::vector<mick::Term> out;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    m.e[0] = static_cast<int16_t>(ex(rng));
    for (int v = 1; v <= vars; ++v) m.e[v] = static_cast<int16_t>(2 * ex(rng));
    int c = coef(rng);
    if (c != 0) out.push_back({m, GaussRat(c)});
  }
  return LaurentPoly::from_terms(out);
}

inline RatFn random_ratfn(std::mt19937_64& rng, int vars) {
  LaurentPoly d = random_poly(rng, vars, 2);
  while (d.is_zero()) d = random_poly(rng, vars, 2);
  return RatFn::fraction(random_poly(rng, vars, 3), d);
}

}  // namespace th
