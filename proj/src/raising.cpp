#include "mick/raising.hpp"

#include <algorithm>

namespace mick {

FreeElt MixedElt::lower_part(int k) const {
  FreeElt out;
  for (const auto& t : terms)
    if (t.k == k) out += t.coeff * t.lower;
  return out;
}

std::vector<int> MixedElt::e_indices() const {
  std::vector<int> ks;
  for (const auto& t : terms)
    if (std::find(ks.begin(), ks.end(), t.k) == ks.end()) ks.push_back(t.k);
  std::sort(ks.begin(), ks.end());
  return ks;
}

std::string MixedElt::str() const {
  std::string out;
  for (int k : e_indices()) {
    FreeElt l = lower_part(k);
    if (l.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string e = "e[" + std::to_string(k) + ",1]";
    out += l == FreeElt::unit() ? e : "(" + l.str() + ")*" + e;
  }
  return out.empty() ? "0" : out;
}

Raising::Raising(const Shapovalov& sh) : sh_(sh) {}

RatFn Raising::D(int l, int j) const {
  const RootData& rd = root_data();
  AffineForm d = rd.eta(j, 1) - rd.eta(l, 1);
  return RatFn::monomial(d.q_power(-1)) / qnum(d.q_power(1));
}

FreeElt Raising::e(int k, int i) const { return sh_.core().f(i, k).omega(); }

MixedElt Raising::zhat(int j) const {
  const RootData& rd = root_data();
  MixedElt z;
  z.terms.push_back({j, FreeElt::unit(), e(j, 1), RatFn(1)});
  for (int k = j + 1; k <= rd.N(); ++k) {
    if (!rd.precedes(j, k)) continue;
    RatFn base = RatFn::monomial((rd.eta(j, 1) - rd.eta(k, 1)).q_power(1)) * D(k, j);
    if (rd.path_length(j, k) % 2) base = -base;
    FreeElt ek = e(k, 1);
    for (const auto& r : rd.routes(j, k)) {
      RatFn c = base;
      for (int m : r) c *= D(m, j);
      z.terms.push_back({k, sh_.core().route_product(j, r, k), ek, c});
    }
  }
  return z;
}

MixedElt Raising::zcheck(int j) const {
  const RootData& rd = root_data();
  RatFn c(1);
  for (int l : rd.successors(j)) c *= D_bar(l, j);
  MixedElt z = zhat(j);
  for (auto& t : z.terms) t.coeff *= c;
  for (int k : z.e_indices()) {
    FreeElt part = z.lower_part(k);
    for (const auto& [w, coef] : part.terms())
      if (!weight_free_denominator(coef)) throw DivisibilityError("z-check keeps a weight-dependent denominator");
  }
  return z;
}

RatFn Raising::delta_plus(int j) const {
  const RootData& rd = root_data();
  Family fam = rd.family();
  if ((fam != Family::B && fam != Family::D) || j > rd.sigma_boundary()) return RatFn(1);
  if (fam == Family::D) {
    Monomial m = (rd.eta(j, 1) - rd.eta(rd.flip(j), 1)).q_power(2);
    return RatFn::fraction(LaurentPoly::monomial(m) - LaurentPoly(1),
                           LaurentPoly::monomial(Monomial::q(1)) - LaurentPoly::monomial(Monomial::q(-1)));
  }
  Monomial m = Monomial::q(1) * (rd.eta(j, 1) - rd.eta(rd.star(), 1)).q_power(2);
  return RatFn::fraction(LaurentPoly::monomial(m) + LaurentPoly(1), LaurentPoly::monomial(Monomial::q(1)) + LaurentPoly(1));
}

bool Raising::plus_range(int j) const { return j >= 2 && j <= root_data().N(); }

MixedElt Raising::gen_plus(int j) const {
  if (!plus_range(j)) throw std::invalid_argument("j outside the range of positive generators");
  MixedElt z = zcheck(j);
  RatFn inv = delta_plus(j).inverse();
  for (auto& t : z.terms) t.coeff *= inv;
  return z;
}

std::vector<std::pair<int, BasisForm>> Raising::gen_plus_basis(int j) const {
  if (!plus_range(j)) throw std::invalid_argument("j outside the range of positive generators");
  MixedElt z = zcheck(j);
  RatFn inv = delta_plus(j).inverse();
  std::vector<std::pair<int, BasisForm>> out;
  for (int k : z.e_indices()) {
    FreeElt x = z.lower_part(k);
    if (x.is_zero()) continue;
    BasisForm b = sh_.basis_form(x, j, k);
    for (auto& t : b) {
      t.coeff = t.coeff * inv;
      if (!weight_free_denominator(t.coeff))
        throw DivisibilityError("coefficient of " + t.label + " is not divisible by delta+");
    }
    if (!b.empty()) out.emplace_back(k, std::move(b));
  }
  return out;
}

FreeElt Raising::apply_raising(const FreeElt& e, const FreeElt& v) const {
  const Verma& verma = sh_.verma();
  FreeElt out;
  for (const auto& [w, c] : e.terms()) {
    out += verma.act_e_word(w, c * v);
  }
  return out;
}

FreeElt Raising::apply_mixed(const MixedElt& z, const FreeElt& v) const {
  const RootData& rd = root_data();
  FreeElt out;
  for (const auto& [counts, comp] : v.components(rd.n())) {
    std::vector<int> eps = rd.eps_of(counts);
    std::vector<int> delta2(eps.size());
    for (size_t r = 0; r < eps.size(); ++r) delta2[r] = -2 * eps[r];
    // scalars commute with the action: one raising per e-part, coefficients folded into the lower part
    for (int k : z.e_indices()) {
      FreeElt lower;
      const FreeElt* raise = nullptr;
      for (const auto& t : z.terms)
        if (t.k == k) {
          lower += t.coeff.shift_t(delta2) * t.lower;
          raise = &t.raise;
        }
      if (lower.is_zero()) continue;
      FreeElt r = apply_raising(*raise, comp);
      if (!r.is_zero()) out += lower * r;
    }
  }
  return out;
}

FreeElt Raising::zcheck_component(int j, int k) const {
  const RootData& rd = root_data();
  RatFn c = RatFn::monomial((rd.eta(k, 1) - rd.eta(j, 1)).q_power(1));
  if (rd.path_length(j, k) % 2) c = -c;
  return c * zcheck(j).lower_part(k);
}

YMap Raising::tau_y(int j) const {
  const RootData* rd = &root_data();
  return [rd, j](int l) { return (rd->eta(j, 1) - rd->eta(rd->flip(l), 1)).q_power(2); };
}

}  // namespace mick
