#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>

namespace mick {

// Exact rational with an int64 fast path; spills into GMP on overflow.
class Rat {
 public:
  Rat() = default;
  Rat(int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(int64_t n, int64_t d);
  explicit Rat(const mpq_class& q);

  Rat(const Rat& o);
  Rat& operator=(const Rat& o);
  Rat(Rat&&) noexcept = default;
  Rat& operator=(Rat&&) noexcept = default;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;
  bool is_small() const { return !big_; }
  int64_t small_num() const { return num_; }
  int64_t small_den() const { return den_; }

  mpq_class to_mpq() const;
  std::string str() const;
  static Rat parse(const std::string& s);

  Rat operator-() const;
  Rat inverse() const;

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }
  Rat& operator*=(const Rat& b) { return *this = *this * b; }

  friend bool operator==(const Rat& a, const Rat& b);
  friend int compare(const Rat& a, const Rat& b);

  // Residue modulo the prime p, or false if p divides the denominator.
  bool mod(uint64_t p, uint64_t& out) const;

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;

  static Rat from_wide(__int128 n, __int128 d);
  static Rat from_mpq(mpq_class q);
};

class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(int64_t n) : re_(n) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rat re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat imag_unit() { return GaussRat(Rat(0), Rat(1)); }
  static GaussRat phase(int k);  // i^k

  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussRat operator-() const { return GaussRat(-re_, -im_); }
  GaussRat inverse() const;
  friend GaussRat operator+(const GaussRat& a, const GaussRat& b);
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b);
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b);
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inverse(); }
  GaussRat& operator+=(const GaussRat& b);
  GaussRat& operator-=(const GaussRat& b);
  GaussRat& operator*=(const GaussRat& b) { return *this = *this * b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend int compare(const GaussRat& a, const GaussRat& b);

  // "a/b+c/d*i" style.
  std::string str() const;
  static GaussRat parse(const std::string& s);

 private:
  Rat re_;
  Rat im_;
};

}  // namespace mick
