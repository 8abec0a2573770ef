#pragma once

#include <vector>

#include "mick/shapovalov.hpp"

namespace mick {

// lower * raise * coeff(h); the Cartan coefficient acts first
struct MixedTerm {
  int k;  // raise = e_{k1}
  FreeElt lower;
  FreeElt raise;
  RatFn coeff;
};

struct MixedElt {
  std::vector<MixedTerm> terms;
  // sum of coeff * lower over the terms with e-part e_{k1}
  FreeElt lower_part(int k) const;
  std::vector<int> e_indices() const;
  std::string str() const;
};

class Raising {
 public:
  explicit Raising(const Shapovalov& sh);
  const RootData& root_data() const { return sh_.root_data(); }

  RatFn D(int l, int j) const;
  RatFn D_bar(int l, int j) const { return D(l, j).inverse(); }
  FreeElt e(int k, int i) const;  // e_{ki} = omega(f_{ik})

  MixedElt zhat(int j) const;
  MixedElt zcheck(int j) const;
  RatFn delta_plus(int j) const;
  MixedElt gen_plus(int j) const;
  bool plus_range(int j) const;

  // per e-part, lowering coefficients in the route basis divided by delta+; throws
  // DivisibilityError unless weight-dependent denominators cancel
  std::vector<std::pair<int, BasisForm>> gen_plus_basis(int j) const;

  FreeElt apply_mixed(const MixedElt& z, const FreeElt& v) const;
  FreeElt apply_raising(const FreeElt& e, const FreeElt& v) const;

  // coefficient of e_{k1} in z-check without the factor (-1)^{||j-k||} q^{eta_j1 - eta_k1}
  FreeElt zcheck_component(int j, int k) const;
  // y_{x'} = q^{2 eta_j1 - 2 eta_x1}, the specialization under which tau(zcheck_jk) = fcheck_{k'j'}
  YMap tau_y(int j) const;

 private:
  const Shapovalov& sh_;
};

}  // namespace mick
