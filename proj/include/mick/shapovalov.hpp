#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mick/verma.hpp"

namespace mick {

// l -> y_l as a monomial in q^{1/2}, t
using YMap = std::function<Monomial(int)>;

struct BasisTerm {
  std::string label;
  FreeElt elt;
  RatFn coeff;
};
using BasisForm = std::vector<BasisTerm>;

struct DivisibilityError : std::logic_error {
  using std::logic_error::logic_error;
};

class Shapovalov {
 public:
  explicit Shapovalov(const Verma& verma);
  const Verma& verma() const { return verma_; }
  const RootData& root_data() const { return verma_.root_data(); }
  const UqCore& core() const { return verma_.core(); }

  // y_l = q^{-2 eta_lj}
  YMap y_default(int j) const;
  RatFn A(int l, const YMap& y) const;
  RatFn A_bar(int l, const YMap& y) const;
  RatFn A(int l, int j) const { return A(l, y_default(j)); }

  FreeElt fhat(int i, int j, const YMap& y) const;
  FreeElt fhat(int i, int j) const { return fhat(i, j, y_default(j)); }
  FreeElt fcheck(int i, int j, const YMap& y) const;
  FreeElt fcheck(int i, int j) const { return fcheck(i, j, y_default(j)); }

  RatFn delta_minus(int j) const;
  bool minus_range(int j) const;
  FreeElt gen_minus(int j) const;

  TensorVec singular_vector(int j) const;
  bool check_singular(const TensorVec& x) const;

  // x written over route products from i to j (path first), basis words as fallback
  BasisForm basis_form(const FreeElt& x, int i, int j) const;
  // f-check_ij / delta_j in basis form; throws DivisibilityError unless every coefficient is
  // free of weight-dependent denominators
  BasisForm divided_basis_form(int i, int j) const;
  BasisForm gen_minus_basis(int j) const { return divided_basis_form(1, j); }

  std::string route_label(int i, const Route& r, int j) const;

 private:
  const Verma& verma_;
};

std::string basis_str(const BasisForm& b);
bool weight_free_denominator(const RatFn& c);

}  // namespace mick
