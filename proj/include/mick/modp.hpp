#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>

#include "mick/laurent.hpp"

namespace mick::modp {

inline constexpr uint64_t kP = (1ULL << 61) - 1;

inline uint64_t reduce(unsigned __int128 x) {
  uint64_t lo = static_cast<uint64_t>(x & kP);
  uint64_t hi = static_cast<uint64_t>(x >> 61);
  uint64_t r = lo + hi;
  if (r >= kP) r -= kP;
  if (r >= kP) r -= kP;
  return r;
}
inline uint64_t mul(uint64_t a, uint64_t b) { return reduce(static_cast<unsigned __int128>(a) * b); }
inline uint64_t add(uint64_t a, uint64_t b) {
  uint64_t r = a + b;
  return r >= kP ? r - kP : r;
}
inline uint64_t sub(uint64_t a, uint64_t b) { return a >= b ? a - b : a + kP - b; }
inline uint64_t pow(uint64_t a, uint64_t e) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}
inline uint64_t inv(uint64_t a) { return pow(a, kP - 2); }

inline std::optional<uint64_t> of(const GaussRat& c) {
  if (!c.is_real()) return std::nullopt;
  uint64_t v;
  if (!c.re().mod(kP, v)) return std::nullopt;
  return v;
}

// Values of q^{1/2} and t_k^{1/2} at a random point.
struct Point {
  std::array<uint64_t, kSlots> v{};
  std::array<uint64_t, kSlots> vinv{};

  static Point random(std::mt19937_64& rng) {
    Point p;
    std::uniform_int_distribution<uint64_t> dist(2, kP - 2);
    for (int k = 0; k < kSlots; ++k) {
      p.v[k] = dist(rng);
      p.vinv[k] = inv(p.v[k]);
    }
    return p;
  }

  uint64_t value(const Monomial& m) const {
    uint64_t r = 1;
    for (int k = 0; k < kSlots; ++k) {
      int e = m.e[k];
      if (e > 0) r = mul(r, modp::pow(v[k], static_cast<uint64_t>(e)));
      else if (e < 0) r = mul(r, modp::pow(vinv[k], static_cast<uint64_t>(-e)));
    }
    return r;
  }

  std::optional<uint64_t> value(const LaurentPoly& p) const {
    uint64_t r = 0;
    for (const auto& t : p.terms()) {
      auto c = of(t.c);
      if (!c) return std::nullopt;
      r = add(r, mul(*c, value(t.m)));
    }
    return r;
  }
};

}  // namespace mick::modp
