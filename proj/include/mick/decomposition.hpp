#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mick/shapovalov.hpp"

namespace mick {

struct PhiValue {
  int i;
  int j;
  RatFn value;  // phi_ij at the weight, a function of q only
  bool zero;
};

struct DecompositionReport {
  std::vector<PhiValue> phis;  // i < j, ordered by j then i
  std::vector<std::pair<int, int>> witnesses;
  // pairs i < j whose eigenvalue ratio x_i / x_j evaluates to 1
  std::vector<std::pair<int, int>> coincidences;
  bool verdict = true;
};

class Decomposition {
 public:
  explicit Decomposition(const Shapovalov& sh);
  const RootData& root_data() const { return sh_.root_data(); }

  RatFn c_coeff(int i, int j) const;
  RatFn c_hat(int i, int j) const;
  RatFn C_route(int j) const;
  RatFn C_factorized(int j) const;
  RatFn C_projection(int j) const;
  // projection scalar of the regularized singular vector, C * prod A_bar / delta-
  RatFn regularized(const RatFn& C, int j) const;
  RatFn C_regularized(int j) const { return regularized(C_route(j), j); }

  RatFn phi(int i, int j) const;
  RatFn x_ratio(int i, int j) const;  // q^{2 xi_ij}
  DecompositionReport direct_sum_report(const WeightSpec& w) const;

  RatFn zero_locus_ratio(int j) const;

 private:
  const Shapovalov& sh_;
};

// orthogonal types: a weight with q^{2(lambda+rho, eps_j)} = -1 (phase i on t_j) and the other
// coordinates integral in [-range, range] for which the report still gives a direct sum
std::optional<WeightSpec> borderline_weight(const Decomposition& d, int j, int range);

// monomial in the weight times a nonzero function of q alone
bool is_weight_monomial_multiple(const RatFn& r);

}  // namespace mick
