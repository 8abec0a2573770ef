#include "mick/shapovalov.hpp"

#include <algorithm>

#include "mick/weight_space.hpp"

namespace mick {

namespace {

RatFn q_minus_qbar() { return q_pow(1) - q_pow(-1); }

}  // namespace

bool weight_free_denominator(const RatFn& c) { return c.den_t_free(); }

Shapovalov::Shapovalov(const Verma& verma) : verma_(verma) {}

YMap Shapovalov::y_default(int j) const {
  const RootData* rd = &root_data();
  return [rd, j](int l) { return rd->eta(l, j).q_power(-2); };
}

RatFn Shapovalov::A(int l, const YMap& y) const {
  return RatFn::fraction(q_minus_qbar().num(), LaurentPoly::monomial(y(l)) - LaurentPoly(1));
}

RatFn Shapovalov::A_bar(int l, const YMap& y) const {
  return RatFn::fraction(LaurentPoly::monomial(y(l)) - LaurentPoly(1), q_minus_qbar().num());
}

FreeElt Shapovalov::fhat(int i, int j, const YMap& y) const {
  const RootData& rd = root_data();
  if (i == j) return FreeElt::unit();
  if (!rd.precedes(i, j)) return FreeElt();
  FreeElt out;
  RatFn Ai = A(i, y);
  for (const auto& r : rd.routes(i, j)) {
    RatFn c = Ai;
    for (int m : r) c *= A(m, y);
    out += c * core().route_product(i, r, j);
  }
  return out;
}

FreeElt Shapovalov::fcheck(int i, int j, const YMap& y) const {
  const RootData& rd = root_data();
  FreeElt x = fhat(i, j, y);
  if (x.is_zero()) return x;
  RatFn c(1);
  for (int l : rd.predecessors(j)) c *= A_bar(l, y);
  FreeElt out = c * x;
  for (const auto& [w, coef] : out.terms())
    if (!weight_free_denominator(coef)) throw DivisibilityError("f-check keeps a weight-dependent denominator");
  return out;
}

RatFn Shapovalov::delta_minus(int j) const {
  const RootData& rd = root_data();
  Family fam = rd.family();
  if (fam != Family::B && fam != Family::D) return RatFn(1);
  if (j < rd.flip(rd.sigma_boundary())) return RatFn(1);
  if (fam == Family::D) return A_bar(rd.flip(j), y_default(j));
  Monomial ystar = rd.eta(rd.star(), j).q_power(-2);
  LaurentPoly num = LaurentPoly::monomial(Monomial::q(1) * ystar) + LaurentPoly(1);
  return RatFn::fraction(num, LaurentPoly::monomial(Monomial::q(1)) + LaurentPoly(1));
}

bool Shapovalov::minus_range(int j) const {
  const RootData& rd = root_data();
  int top = rd.type().orthogonal() ? rd.N() - 1 : rd.N();
  return j >= 2 && j <= top;
}

FreeElt Shapovalov::gen_minus(int j) const {
  if (!minus_range(j)) throw std::invalid_argument("j outside the range of negative generators");
  return delta_minus(j).inverse() * fcheck(1, j);
}

TensorVec Shapovalov::singular_vector(int j) const {
  const RootData& rd = root_data();
  TensorVec x;
  for (int i = 1; i <= j; ++i)
    if (rd.preceq(i, j)) x.emplace(i, fhat(i, j));
  return x;
}

bool Shapovalov::check_singular(const TensorVec& x) const {
  for (int k = 1; k <= root_data().n(); ++k)
    if (!verma_.is_zero(verma_.act_tensor({GenKind::E, k}, x))) return false;
  return true;
}

std::string Shapovalov::route_label(int i, const Route& r, int j) const {
  const RootData& rd = root_data();
  std::string out;
  int prev = i;
  auto seg = [&](int a, int b) {
    if (!out.empty()) out += "*";
    for (const auto& arc : rd.arcs())
      if (arc.from == a && arc.to == b && core().f(a, b) == FreeElt::letter(arc.label)) {
        out += "f" + std::to_string(arc.label);
        return;
      }
    out += "f[" + std::to_string(a) + "," + std::to_string(b) + "]";
  };
  for (int m : r) {
    seg(prev, m);
    prev = m;
  }
  seg(prev, j);
  return out;
}

BasisForm Shapovalov::basis_form(const FreeElt& x, int i, int j) const {
  const RootData& rd = root_data();
  if (i == j) return {{"1", FreeElt::unit(), x.coeff(Word())}};
  std::vector<int> diff(rd.dim());
  for (int d = 0; d < rd.dim(); ++d) diff[d] = rd.node_weight(i)[d] - rd.node_weight(j)[d];
  const WeightSpace& ws = verma_.space(rd.to_simple(diff));

  std::vector<Route> ordered;
  std::vector<int> lp = rd.lex_path(i, j);
  Route lex(lp.begin() + 1, lp.end() - 1);
  ordered.push_back(lex);
  auto is_arc = [&](int a, int b) { return rd.path_length(a, b) == 1; };
  std::vector<Route> rest;
  for (const auto& r : rd.routes(i, j)) {
    if (r == lex) continue;
    bool tail_arcs = true;
    for (size_t k = 0; k < r.size(); ++k)
      if (!is_arc(r[k], k + 1 < r.size() ? r[k + 1] : j)) tail_arcs = false;
    bool path = tail_arcs && is_arc(i, r.empty() ? j : r[0]);
    if (tail_arcs && !path) ordered.push_back(r);
    else rest.push_back(r);
  }
  ordered.insert(ordered.end(), rest.begin(), rest.end());

  std::vector<FreeElt> cands;
  std::vector<std::string> labels;
  for (const auto& r : ordered) {
    cands.push_back(core().route_product(i, r, j));
    labels.push_back(route_label(i, r, j));
  }
  for (const auto& w : ws.basis_words()) {
    cands.push_back(FreeElt::word(w));
    labels.push_back(word_str(w, Sign::Lowering));
  }
  std::vector<size_t> pick = ws.select_independent(cands);
  std::vector<FreeElt> basis;
  for (size_t p : pick) basis.push_back(cands[p]);
  std::vector<RatFn> d = ws.solve(basis, ws.dual_coords(x));
  BasisForm out;
  for (size_t b = 0; b < pick.size(); ++b)
    if (!d[b].is_zero()) out.push_back({labels[pick[b]], basis[b], d[b]});
  return out;
}

BasisForm Shapovalov::divided_basis_form(int i, int j) const {
  RatFn inv = delta_minus(j).inverse();
  BasisForm b = basis_form(fcheck(i, j), i, j);
  for (auto& t : b) {
    t.coeff = t.coeff * inv;
    if (!weight_free_denominator(t.coeff))
      throw DivisibilityError("coefficient of " + t.label + " is not divisible by delta");
  }
  return b;
}

std::string basis_str(const BasisForm& b) {
  if (b.empty()) return "0";
  std::string out;
  for (const auto& t : b) {
    if (!out.empty()) out += " + ";
    if (t.coeff == RatFn(1)) out += t.label;
    else if (t.label == "1") out += "(" + t.coeff.str() + ")";
    else out += "(" + t.coeff.str() + ")*" + t.label;
  }
  return out;
}

}  // namespace mick
