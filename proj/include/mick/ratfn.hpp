#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mick/laurent.hpp"

namespace mick {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero rational function") {}
};

struct PoleError : std::runtime_error {
  explicit PoleError(const std::string& factor)
      : std::runtime_error("pole: factor " + factor + " vanishes at the requested weight"), factor(factor) {}
  std::string factor;
};

// Denominator factor: normalized polynomial (no monomial factor, monic leading term, >= 2 terms).
struct Factor {
  LaurentPoly p;
  int mult = 1;
};

// num / prod(den factors). Factors are split along binomial and cyclotomic identities and
// cancelled by exact trial division only; no gcd is ever computed.
class RatFn {
 public:
  RatFn() = default;
  RatFn(LaurentPoly num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
  RatFn(GaussRat c) : num_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  RatFn(int64_t c) : num_(GaussRat(c)) {}  // NOLINT(google-explicit-constructor)
  static RatFn monomial(const Monomial& m, GaussRat c = GaussRat(1)) { return RatFn(LaurentPoly::monomial(m, std::move(c))); }
  static RatFn fraction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const std::vector<Factor>& den_factors() const { return den_; }
  LaurentPoly den() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  bool den_t_free() const;
  bool t_free() const;
  bool has_imaginary() const;

  RatFn operator-() const;
  RatFn inverse() const;
  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inverse(); }
  RatFn& operator+=(const RatFn& b) { return *this = *this + b; }
  RatFn& operator-=(const RatFn& b) { return *this = *this - b; }
  RatFn& operator*=(const RatFn& b) { return *this = *this * b; }
  RatFn pow(int n) const;
  friend bool operator==(const RatFn& a, const RatFn& b);

  // Applies a monomial substitution m -> c*m' to numerator and every factor.
  template <class F>
  RatFn substitute(F&& f) const {
    RatFn r(num_.map_monomials(f));
    for (const auto& fac : den_) {
      LaurentPoly d = fac.p.map_monomials(f);
      if (d.is_zero()) throw PoleError(to_string(fac.p));
      r = r / RatFn(d).pow(fac.mult);
    }
    return r;
  }

  // t_k -> t_k q^{delta_k/2}; delta given doubled per weight coordinate.
  RatFn shift_t(const std::vector<int>& delta2) const;

  static std::string to_string(const LaurentPoly& p);
  std::string str() const;

 private:
  LaurentPoly num_;
  std::vector<Factor> den_;

  void cancel();
};

std::string half_str(int doubled);

// [z]_q with q^z given as a monomial.
RatFn qnum(const Monomial& qz);
RatFn qnum_half(int z2);  // z = z2/2

// t_k -> phase_k * q^{c_k}; c_k doubled, phase_k in Z/4 meaning i^phase.
struct WeightSpec {
  std::vector<int> c2;
  std::vector<int> phase;
};
RatFn evaluate(const RatFn& f, const WeightSpec& w);
LaurentPoly evaluate(const LaurentPoly& p, const WeightSpec& w);

}  // namespace mick
