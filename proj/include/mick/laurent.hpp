#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mick/rational.hpp"

namespace mick {

// Slot 0 holds the exponent of q^{1/2}; slots 1..7 hold doubled exponents of t_1..t_7.
inline constexpr int kSlots = 8;
inline constexpr int kMaxT = kSlots - 1;

struct Monomial {
  std::array<int16_t, kSlots> e{};

  static Monomial q_half(int d) {
    Monomial m;
    m.e[0] = static_cast<int16_t>(d);
    return m;
  }
  static Monomial q(int k) { return q_half(2 * k); }
  static Monomial t(int k, int doubled) {
    Monomial m;
    m.e[k] = static_cast<int16_t>(doubled);
    return m;
  }

  bool is_unit() const {
    for (auto x : e)
      if (x != 0) return false;
    return true;
  }
  bool t_free() const {
    for (int k = 1; k < kSlots; ++k)
      if (e[k] != 0) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int k = 0; k < kSlots; ++k) r.e[k] = static_cast<int16_t>(e[k] + o.e[k]);
    return r;
  }
  Monomial inverse() const {
    Monomial r;
    for (int k = 0; k < kSlots; ++k) r.e[k] = static_cast<int16_t>(-e[k]);
    return r;
  }
  Monomial pow(int n) const {
    Monomial r;
    for (int k = 0; k < kSlots; ++k) r.e[k] = static_cast<int16_t>(e[k] * n);
    return r;
  }
  bool divides(const Monomial& o) const {
    for (int k = 0; k < kSlots; ++k)
      if (e[k] > o.e[k]) return false;
    return true;
  }
  int total_degree() const {
    int s = 0;
    for (auto x : e) s += x;
    return s;
  }
  auto operator<=>(const Monomial&) const = default;
};

struct Term {
  Monomial m;
  GaussRat c;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(GaussRat c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(int64_t c) : LaurentPoly(GaussRat(c)) {}  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(const Monomial& m, GaussRat c = GaussRat(1));
  static LaurentPoly from_terms(std::vector<Term> terms);
  // terms already strictly ascending with nonzero coefficients
  static LaurentPoly from_sorted(std::vector<Term> terms) {
    LaurentPoly p;
    p.terms_ = std::move(terms);
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_unit()); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool t_free() const;
  bool has_imaginary() const;
  const Term& leading() const { return terms_.back(); }
  Monomial min_exponents() const;
  Monomial max_exponents() const;
  GaussRat constant_term() const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }
  LaurentPoly scaled(const GaussRat& c) const;
  LaurentPoly times(const Monomial& m) const;
  LaurentPoly pow(int n) const;
  // this += c * m * b, in place.
  void add_scaled(const LaurentPoly& b, const GaussRat& c, const Monomial& m);

  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

  template <class F>
  LaurentPoly map_monomials(F&& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      auto [c, m] = f(t.m);
      if (!c.is_zero()) out.push_back({m, t.c * c});
    }
    return from_terms(std::move(out));
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend int compare(const LaurentPoly& a, const LaurentPoly& b);

 private:
  std::vector<Term> terms_;  // ascending lex order of monomials, nonzero coefficients
};

}  // namespace mick
