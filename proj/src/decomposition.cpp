#include "mick/decomposition.hpp"

namespace mick {

namespace {

RatFn q_minus_qbar() { return q_pow(1) - q_pow(-1); }

}  // namespace

Decomposition::Decomposition(const Shapovalov& sh) : sh_(sh) {}

RatFn Decomposition::c_coeff(int i, int j) const {
  const RootData& rd = root_data();
  RatFn c = q_half_pow(-rd.eta(i, j).c2);
  if (rd.family() == Family::A || i != rd.flip(j)) return c;
  int sigma = rd.type().orthogonal() ? -1 : 1;
  return q_pow(-1) * c + RatFn(sigma) * q_pow(1);
}

RatFn Decomposition::c_hat(int i, int j) const {
  const RootData& rd = root_data();
  if (i == j) return RatFn(1);
  if (!rd.precedes(i, j)) return RatFn();
  YMap y = sh_.y_default(j);
  RatFn B_i = -sh_.A(i, y);
  RatFn sum;
  for (const auto& r : rd.routes(i, j)) {
    RatFn term = B_i;
    int prev = i;
    for (int m : r) {
      term *= c_coeff(prev, m) * -sh_.A(m, y);
      prev = m;
    }
    sum += term * c_coeff(prev, j);
  }
  return sum * q_half_pow(rd.rho_tilde2(i) - rd.rho_tilde2(j));
}

RatFn Decomposition::C_route(int j) const {
  RatFn sum;
  for (int i = 1; i <= j; ++i) sum += c_hat(i, j);
  return sum;
}

RatFn Decomposition::C_factorized(int j) const {
  const RootData& rd = root_data();
  YMap y = sh_.y_default(j);
  int jp = rd.family() == Family::A ? 0 : rd.flip(j);
  int star = rd.star();
  RatFn out(1);
  for (int i = 1; i < j; ++i) {
    if (i == jp || (star && i == star)) continue;
    out *= RatFn(1) - q_pow(1) * sh_.A(i, y);
  }
  if (rd.family() == Family::C && jp < j) out *= RatFn(1) - qnum_half(2 * 2) * q_pow(2) * sh_.A(jp, y);
  if (star && star < j) {
    LaurentPoly ys = LaurentPoly::monomial(y(star));
    out *= RatFn::fraction(ys - LaurentPoly::monomial(Monomial::q(1)), ys - LaurentPoly::monomial(Monomial::q(-1)));
  }
  return out;
}

RatFn Decomposition::C_projection(int j) const { return sh_.verma().graded_project(j, sh_.singular_vector(j)); }

RatFn Decomposition::regularized(const RatFn& C, int j) const {
  RatFn c = C;
  YMap y = sh_.y_default(j);
  for (int l : root_data().predecessors(j)) c *= sh_.A_bar(l, y);
  return c / sh_.delta_minus(j);
}

RatFn Decomposition::phi(int i, int j) const {
  const RootData& rd = root_data();
  if (rd.type().orthogonal() && i == rd.flip(j)) {
    if (rd.family() == Family::D) return RatFn(1);
    return RatFn::fraction(LaurentPoly::monomial(rd.xi(i, j).q_power(1)) - LaurentPoly(1), q_minus_qbar().num());
  }
  return RatFn::fraction(LaurentPoly::monomial(rd.xi(i, j).q_power(2)) - LaurentPoly(1), q_minus_qbar().num());
}

RatFn Decomposition::x_ratio(int i, int j) const { return RatFn::monomial(root_data().xi(i, j).q_power(2)); }

DecompositionReport Decomposition::direct_sum_report(const WeightSpec& w) const {
  const RootData& rd = root_data();
  DecompositionReport rep;
  for (int j = 2; j <= rd.N(); ++j)
    for (int i = 1; i < j; ++i) {
      RatFn v = evaluate(phi(i, j), w);
      bool z = v.is_zero();
      rep.phis.push_back({i, j, v, z});
      if (z) rep.witnesses.emplace_back(i, j);
      if (evaluate(x_ratio(i, j), w) == RatFn(1)) rep.coincidences.emplace_back(i, j);
    }
  rep.verdict = rep.witnesses.empty();
  return rep;
}

RatFn Decomposition::zero_locus_ratio(int j) const {
  RatFn prod(1);
  for (int i = 1; i < j; ++i) prod *= phi(i, j);
  return C_regularized(j) / prod;
}

std::optional<WeightSpec> borderline_weight(const Decomposition& d, int j, int range) {
  const RootData& rd = d.root_data();
  int dim = rd.dim();
  WeightSpec w{std::vector<int>(dim, 0), std::vector<int>(dim, 0)};
  w.c2[j - 1] = -rd.rho2()[j - 1];
  w.phase[j - 1] = 1;
  std::vector<int> free;
  for (int k = 0; k < dim; ++k)
    if (k != j - 1) free.push_back(k);
  std::vector<int> v(free.size(), -range);
  while (true) {
    for (size_t a = 0; a < free.size(); ++a) w.c2[free[a]] = 2 * v[a];
    if (d.direct_sum_report(w).verdict) return w;
    size_t a = 0;
    while (a < v.size() && v[a] == range) v[a++] = -range;
    if (a == v.size()) return std::nullopt;
    ++v[a];
  }
}

namespace {

Monomial t_part(const Monomial& m) {
  Monomial r = m;
  r.e[0] = 0;
  return r;
}

// terms of p whose weight part is the largest one
LaurentPoly top_weight_part(const LaurentPoly& p) {
  Monomial top = t_part(p.terms().front().m);
  for (const auto& t : p.terms())
    if (top < t_part(t.m)) top = t_part(t.m);
  std::vector<Term> out;
  for (const auto& t : p.terms())
    if (t_part(t.m) == top) out.push_back(t);
  return LaurentPoly::from_terms(out);
}

}  // namespace

bool is_weight_monomial_multiple(const RatFn& r) {
  if (r.is_zero()) return false;
  LaurentPoly num = r.num(), den = r.den();
  return num * top_weight_part(den) == den * top_weight_part(num);
}

}  // namespace mick
