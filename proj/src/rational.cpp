#include "mick/rational.hpp"

#include <limits>
#include <stdexcept>

namespace mick {

namespace {

using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(__int128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

bool fits64(__int128 v) {
  return v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max();
}

mpz_class mpz_from(__int128 v) {
  bool neg = v < 0;
  u128 a = abs128(v);
  mpz_class hi(static_cast<unsigned long>(a >> 64));
  mpz_class r = (hi << 64) + mpz_class(static_cast<unsigned long>(a & 0xffffffffffffffffULL));
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rat::Rat(int64_t n, int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(n, d);
}

Rat::Rat(const mpq_class& q) { *this = from_mpq(q); }

Rat::Rat(const Rat& o) : num_(o.num_), den_(o.den_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rat& Rat::operator=(const Rat& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
  return *this;
}

Rat Rat::from_wide(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 g = gcd128(abs128(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
  }
  Rat r;
  if (fits64(n) && fits64(d)) {
    r.num_ = static_cast<int64_t>(n);
    r.den_ = static_cast<int64_t>(d);
    return r;
  }
  mpq_class q(mpz_from(n), mpz_from(d));
  r.big_ = std::make_unique<mpq_class>(std::move(q));
  return r;
}

Rat Rat::from_mpq(mpq_class q) {
  q.canonicalize();
  Rat r;
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    r.num_ = q.get_num().get_si();
    r.den_ = q.get_den().get_si();
    return r;
  }
  r.big_ = std::make_unique<mpq_class>(std::move(q));
  return r;
}

mpq_class Rat::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

bool Rat::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rat::sign() const {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

std::string Rat::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::parse(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  return from_mpq(q);
}

Rat Rat::operator-() const {
  if (big_) return from_mpq(-*big_);
  return from_wide(-static_cast<__int128>(num_), den_);
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational");
  if (big_) return from_mpq(1 / *big_);
  return from_wide(den_, num_);
}

Rat operator+(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      int64_t s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s)) return Rat(s);
    }
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rat::from_wide(n, d);
  }
  return Rat::from_mpq(a.to_mpq() + b.to_mpq());
}

Rat operator-(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      int64_t s;
      if (!__builtin_sub_overflow(a.num_, b.num_, &s)) return Rat(s);
    }
    __int128 n = static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rat::from_wide(n, d);
  }
  return Rat::from_mpq(a.to_mpq() - b.to_mpq());
}

Rat operator*(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      int64_t s;
      if (!__builtin_mul_overflow(a.num_, b.num_, &s)) return Rat(s);
    }
    __int128 n = static_cast<__int128>(a.num_) * b.num_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rat::from_wide(n, d);
  }
  return Rat::from_mpq(a.to_mpq() * b.to_mpq());
}

Rat operator/(const Rat& a, const Rat& b) { return a * b.inverse(); }

bool operator==(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

int compare(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l < r ? -1 : (l > r ? 1 : 0);
  }
  return cmp(a.to_mpq(), b.to_mpq());
}

bool Rat::mod(uint64_t p, uint64_t& out) const {
  mpz_class P(static_cast<unsigned long>(p));
  mpz_class n, d;
  if (big_) {
    n = big_->get_num();
    d = big_->get_den();
  } else {
    n = static_cast<long>(num_);
    d = static_cast<long>(den_);
  }
  mpz_class nm, dm;
  mpz_fdiv_r(nm.get_mpz_t(), n.get_mpz_t(), P.get_mpz_t());
  mpz_fdiv_r(dm.get_mpz_t(), d.get_mpz_t(), P.get_mpz_t());
  if (dm == 0) return false;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), dm.get_mpz_t(), P.get_mpz_t());
  mpz_class r = (nm * inv) % P;
  out = r.get_ui();
  return true;
}

GaussRat GaussRat::phase(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return GaussRat(1);
    case 1: return GaussRat(Rat(0), Rat(1));
    case 2: return GaussRat(-1);
    default: return GaussRat(Rat(0), Rat(-1));
  }
}

GaussRat GaussRat::inverse() const {
  if (im_.is_zero()) return GaussRat(re_.inverse());
  Rat n = re_ * re_ + im_ * im_;
  return GaussRat(re_ / n, -im_ / n);
}

GaussRat operator+(const GaussRat& a, const GaussRat& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) return GaussRat(a.re_ + b.re_);
  return GaussRat(a.re_ + b.re_, a.im_ + b.im_);
}

GaussRat operator-(const GaussRat& a, const GaussRat& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) return GaussRat(a.re_ - b.re_);
  return GaussRat(a.re_ - b.re_, a.im_ - b.im_);
}

GaussRat operator*(const GaussRat& a, const GaussRat& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) return GaussRat(a.re_ * b.re_);
  return GaussRat(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

GaussRat& GaussRat::operator+=(const GaussRat& b) {
  re_ += b.re_;
  if (!b.im_.is_zero()) im_ += b.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& b) {
  re_ -= b.re_;
  if (!b.im_.is_zero()) im_ -= b.im_;
  return *this;
}

int compare(const GaussRat& a, const GaussRat& b) {
  int c = compare(a.re_, b.re_);
  return c != 0 ? c : compare(a.im_, b.im_);
}

std::string GaussRat::str() const {
  if (im_.is_zero()) return re_.str();
  std::string ims = im_.str() + "*i";
  if (re_.is_zero()) return ims;
  return re_.str() + (im_.sign() > 0 ? "+" : "") + ims;
}

GaussRat GaussRat::parse(const std::string& s) {
  if (s.size() < 2 || s.substr(s.size() - 2) != "*i") return GaussRat(Rat::parse(s));
  std::string body = s.substr(0, s.size() - 2);
  size_t split = std::string::npos;
  for (size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return GaussRat(Rat(0), Rat::parse(body));
  std::string im = body.substr(split);
  if (im[0] == '+') im.erase(0, 1);
  return GaussRat(Rat::parse(body.substr(0, split)), Rat::parse(im));
}

}  // namespace mick
