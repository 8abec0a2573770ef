#include "mick/ratfn.hpp"

#include "mick/modp.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace mick {

namespace {

// Integer coefficients of the cyclotomic polynomial Phi_d, lowest degree first.
const std::vector<int64_t>& cyclotomic(int d) {
  static std::mutex mu;
  static std::vector<std::vector<int64_t>> table;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= d) {
    int n = static_cast<int>(table.size());
    if (n == 0) {
      table.push_back({});
      continue;
    }
    std::vector<int64_t> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int e = 1; e < n; ++e) {
      if (n % e != 0) continue;
      const auto& div = table[e];
      int dd = static_cast<int>(div.size()) - 1;
      std::vector<int64_t> quot(p.size() - dd, 0);
      for (int k = static_cast<int>(p.size()) - 1; k >= dd; --k) {
        int64_t c = p[k];
        quot[k - dd] = c;
        for (int r = 0; r <= dd; ++r) p[k - dd + r] -= c * div[r];
      }
      p = quot;
    }
    table.push_back(p);
  }
  return table[d];
}

LaurentPoly cyclotomic_in(int d, const Monomial& x) {
  const auto& c = cyclotomic(d);
  std::vector<Term> terms;
  for (size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) terms.push_back({x.pow(static_cast<int>(k)), GaussRat(c[k])});
  return LaurentPoly::from_terms(std::move(terms));
}

struct Normalized {
  GaussRat c = GaussRat(1);
  Monomial m;
  LaurentPoly p;
};

Normalized normalize_piece(const LaurentPoly& p) {
  Normalized r;
  r.m = p.min_exponents();
  LaurentPoly shifted = p.times(r.m.inverse());
  r.c = shifted.leading().c;
  r.p = shifted.scaled(r.c.inverse());
  return r;
}

struct Split {
  GaussRat c = GaussRat(1);
  Monomial m;
  std::vector<LaurentPoly> pieces;
};

void absorb(Split& s, const Normalized& n) {
  s.c = s.c * n.c;
  s.m = s.m * n.m;
}

Split split(const LaurentPoly& p) {
  Split s;
  Normalized n = normalize_piece(p);
  absorb(s, n);
  const LaurentPoly& pp = n.p;
  if (pp.size() == 1) return s;
  if (pp.size() == 2) {
    const Term& lo = pp.terms()[0];
    const Term& hi = pp.terms()[1];
    Monomial v = hi.m * lo.m.inverse();
    // keep t-exponents integral so that phased evaluation stays well defined
    int g = std::abs(static_cast<int>(v.e[0]));
    bool integral = true;
    for (int k = 1; k < kSlots; ++k) integral = integral && v.e[k] % 2 == 0;
    for (int k = 1; k < kSlots; ++k) g = std::gcd(g, std::abs(static_cast<int>(v.e[k])) / (integral ? 2 : 1));
    Monomial x;
    for (int k = 0; k < kSlots; ++k) x.e[k] = static_cast<int16_t>(v.e[k] / g);
    std::vector<int> ds;
    if (lo.c == GaussRat(-1)) {
      for (int d = 1; d <= g; ++d)
        if (g % d == 0) ds.push_back(d);
    } else if (lo.c == GaussRat(1)) {
      for (int d = 1; d <= 2 * g; ++d)
        if ((2 * g) % d == 0 && g % d != 0) ds.push_back(d);
    }
    if (!ds.empty()) {
      // pp = lo.m * (x^g + lo.c); expand each cyclotomic piece in x.
      s.m = s.m * lo.m;
      for (int d : ds) {
        Normalized piece = normalize_piece(cyclotomic_in(d, x));
        absorb(s, piece);
        s.pieces.push_back(piece.p);
      }
      return s;
    }
    s.pieces.push_back(pp);
    return s;
  }
  if (pp.t_free()) {
    LaurentPoly rest = pp;
    int deg = rest.max_exponents().e[0];
    for (int d = 1; d <= 4 * deg + 4 && rest.size() > 1; ++d) {
      int phideg = static_cast<int>(cyclotomic(d).size()) - 1;
      if (phideg > rest.max_exponents().e[0]) continue;
      LaurentPoly phi = cyclotomic_in(d, Monomial::q_half(1));
      while (rest.size() > 1) {
        auto q = rest.divide_exact(phi);
        if (!q) break;
        rest = *q;
        s.pieces.push_back(phi);
      }
    }
    if (rest.size() > 1) {
      Normalized n2 = normalize_piece(rest);
      absorb(s, n2);
      s.pieces.push_back(n2.p);
    } else {
      absorb(s, normalize_piece(rest));
    }
    return s;
  }
  s.pieces.push_back(pp);
  return s;
}

bool factor_less(const LaurentPoly& a, const LaurentPoly& b) { return compare(a, b) < 0; }

void insert_factor(std::vector<Factor>& den, const LaurentPoly& p, int mult) {
  auto it = std::lower_bound(den.begin(), den.end(), p,
                             [](const Factor& f, const LaurentPoly& x) { return factor_less(f.p, x); });
  if (it != den.end() && it->p == p) {
    it->mult += mult;
  } else {
    den.insert(it, Factor{p, mult});
  }
}

const modp::Point& filter_point() {
  static const modp::Point pt = [] {
    std::mt19937_64 rng(0xd1f5);
    return modp::Point::random(rng);
  }();
  return pt;
}

// p specialized to a univariate dense polynomial in slot v, powers of the variable stripped
std::optional<std::vector<uint64_t>> specialize(const LaurentPoly& p, int v) {
  const modp::Point& pt = filter_point();
  int lo = p.min_exponents().e[v], hi = p.max_exponents().e[v];
  std::vector<uint64_t> out(static_cast<size_t>(hi - lo + 1), 0);
  for (const auto& t : p.terms()) {
    auto c = modp::of(t.c);
    if (!c) return std::nullopt;
    Monomial rest = t.m;
    rest.e[v] = 0;
    size_t at = static_cast<size_t>(t.m.e[v] - lo);
    out[at] = modp::add(out[at], modp::mul(*c, pt.value(rest)));
  }
  size_t z = 0;
  while (z < out.size() && out[z] == 0) ++z;
  out.erase(out.begin(), out.begin() + static_cast<long>(z));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// false only when d certainly does not divide p
bool may_divide(const LaurentPoly& p, const LaurentPoly& d) {
  Monomial lo = d.min_exponents(), hi = d.max_exponents();
  int v = -1;
  for (int k = 0; k < kSlots && v < 0; ++k)
    if (hi.e[k] != lo.e[k]) v = k;
  if (v < 0) return true;
  auto du = specialize(d, v);
  auto pu = specialize(p, v);
  if (!du || !pu || du->size() < 2) return true;
  if (pu->empty()) return true;
  if (pu->size() < du->size()) return false;
  std::vector<uint64_t> r = *pu;
  uint64_t inv = modp::inv(du->back());
  size_t dn = du->size() - 1;
  for (size_t top = r.size() - 1; top >= dn; --top) {
    uint64_t c = modp::mul(r[top], inv);
    if (c)
      for (size_t k = 0; k <= dn; ++k) r[top - dn + k] = modp::sub(r[top - dn + k], modp::mul(c, (*du)[k]));
    if (top == dn) break;
  }
  for (size_t k = 0; k < dn; ++k)
    if (r[k]) return false;
  return true;
}

// Divides num by den factors where possible; returns leftover factors.
void cancel_against(LaurentPoly& num, std::vector<Factor>& den) {
  if (num.is_zero()) {
    den.clear();
    return;
  }
  for (auto& f : den) {
    while (f.mult > 0) {
      if (num.t_free() && !f.p.t_free()) break;
      if (!may_divide(num, f.p)) break;
      auto q = num.divide_exact(f.p);
      if (!q) break;
      num = std::move(*q);
      --f.mult;
    }
  }
  den.erase(std::remove_if(den.begin(), den.end(), [](const Factor& f) { return f.mult == 0; }), den.end());
}

LaurentPoly expand(const std::vector<Factor>& den) {
  LaurentPoly r(1);
  for (const auto& f : den)
    for (int k = 0; k < f.mult; ++k) r = r * f.p;
  return r;
}

bool same_den(const std::vector<Factor>& a, const std::vector<Factor>& b) {
  if (a.size() != b.size()) return false;
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k].mult != b[k].mult || !(a[k].p == b[k].p)) return false;
  return true;
}

}  // namespace

RatFn RatFn::fraction(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero();
  RatFn r;
  if (num.is_zero()) return r;
  Split s = split(den);
  r.num_ = num.times(s.m.inverse()).scaled(s.c.inverse());
  for (const auto& p : s.pieces) insert_factor(r.den_, p, 1);
  r.cancel();
  return r;
}

void RatFn::cancel() { cancel_against(num_, den_); }

LaurentPoly RatFn::den() const { return expand(den_); }

bool RatFn::den_t_free() const {
  for (const auto& f : den_)
    if (!f.p.t_free()) return false;
  return true;
}

bool RatFn::t_free() const { return num_.t_free() && den_t_free(); }

bool RatFn::has_imaginary() const {
  if (num_.has_imaginary()) return true;
  for (const auto& f : den_)
    if (f.p.has_imaginary()) return true;
  return false;
}

RatFn RatFn::operator-() const {
  RatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFn RatFn::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Split s = split(num_);
  RatFn r;
  r.num_ = expand(den_).times(s.m.inverse()).scaled(s.c.inverse());
  for (const auto& p : s.pieces) insert_factor(r.den_, p, 1);
  r.cancel();
  return r;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RatFn r;
  if (same_den(a.den_, b.den_)) {
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
    if (!r.den_.empty()) r.cancel();
    if (r.num_.is_zero()) r.den_.clear();
    return r;
  }
  std::vector<Factor> lcm = a.den_;
  for (const auto& f : b.den_) {
    auto it = std::find_if(lcm.begin(), lcm.end(), [&](const Factor& g) { return g.p == f.p; });
    if (it == lcm.end()) insert_factor(lcm, f.p, f.mult);
    else it->mult = std::max(it->mult, f.mult);
  }
  auto cofactor = [&](const std::vector<Factor>& den) {
    std::vector<Factor> rest;
    for (const auto& f : lcm) {
      int have = 0;
      for (const auto& g : den)
        if (g.p == f.p) have = g.mult;
      if (f.mult > have) rest.push_back(Factor{f.p, f.mult - have});
    }
    return expand(rest);
  };
  r.num_ = a.num_ * cofactor(a.den_) + b.num_ * cofactor(b.den_);
  r.den_ = std::move(lcm);
  r.cancel();
  return r;
}

RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

RatFn operator*(const RatFn& a, const RatFn& b) {
  if (a.is_zero() || b.is_zero()) return RatFn();
  if (a.den_.empty() && b.den_.empty()) return RatFn(a.num_ * b.num_);
  LaurentPoly na = a.num_, nb = b.num_;
  std::vector<Factor> da = a.den_, db = b.den_;
  if (!db.empty()) cancel_against(na, db);
  if (!da.empty()) cancel_against(nb, da);
  RatFn r;
  r.num_ = na * nb;
  r.den_ = std::move(da);
  for (const auto& f : db) insert_factor(r.den_, f.p, f.mult);
  return r;
}

RatFn RatFn::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RatFn r(1);
  for (int k = 0; k < n; ++k) r = r * *this;
  return r;
}

bool operator==(const RatFn& a, const RatFn& b) {
  if (same_den(a.den_, b.den_)) return a.num_ == b.num_;
  return (a - b).is_zero();
}

RatFn RatFn::shift_t(const std::vector<int>& delta2) const {
  return substitute([&](const Monomial& m) {
    Monomial r = m;
    int add = 0;
    for (size_t k = 0; k < delta2.size(); ++k) {
      int prod = delta2[k] * m.e[k + 1];
      if (prod % 2 != 0) throw std::domain_error("weight shift leaves the monomial lattice");
      add += prod / 2;
    }
    r.e[0] = static_cast<int16_t>(r.e[0] + add);
    return std::make_pair(GaussRat(1), r);
  });
}

std::string half_str(int doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

namespace {

std::string monomial_str(const Monomial& m) {
  std::string out;
  auto emit = [&](const std::string& var, int e2) {
    if (e2 == 0) return;
    if (!out.empty()) out += "*";
    out += var;
    if (e2 == 2) return;
    std::string h = half_str(e2);
    out += "^" + (h.find_first_of("/-") != std::string::npos ? "(" + h + ")" : h);
  };
  emit("q", m.e[0]);
  for (int k = 1; k < kSlots; ++k) emit("t" + std::to_string(k), m.e[k]);
  return out;
}

}  // namespace

std::string RatFn::to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<const Term*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    int da = a->m.total_degree(), db = b->m.total_degree();
    if (da != db) return da < db;
    return a->m < b->m;
  });
  std::ostringstream os;
  bool first = true;
  for (const Term* t : order) {
    std::string mon = monomial_str(t->m);
    GaussRat c = t->c;
    bool neg = c.is_real() && c.re().sign() < 0;
    if (neg) c = -c;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    std::string cs = c.str();
    if (!c.is_real()) cs = "(" + cs + ")";
    if (mon.empty()) os << cs;
    else if (c.is_one()) os << mon;
    else os << cs << "*" << mon;
  }
  return os.str();
}

std::string RatFn::str() const {
  if (den_.empty()) return to_string(num_);
  std::string num = to_string(num_);
  if (num_.size() > 1) num = "(" + num + ")";
  // q-only factors are multiplied back together for readability
  LaurentPoly qpart(1);
  std::vector<std::string> parts;
  for (const auto& f : den_) {
    if (f.p.t_free()) {
      qpart = qpart * f.p.pow(f.mult);
      continue;
    }
    std::string s = "(" + to_string(f.p) + ")";
    if (f.mult > 1) s += "^" + std::to_string(f.mult);
    parts.push_back(s);
  }
  if (!qpart.is_constant()) parts.insert(parts.begin(), "(" + to_string(qpart) + ")");
  std::string den;
  for (const auto& s : parts) den += (den.empty() ? "" : "*") + s;
  if (parts.size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

RatFn qnum(const Monomial& qz) {
  LaurentPoly num = LaurentPoly::monomial(qz) - LaurentPoly::monomial(qz.inverse());
  LaurentPoly den = LaurentPoly::monomial(Monomial::q(1)) - LaurentPoly::monomial(Monomial::q(-1));
  return RatFn::fraction(num, den);
}

RatFn qnum_half(int z2) { return qnum(Monomial::q_half(z2)); }

namespace {

std::pair<GaussRat, Monomial> eval_monomial(const Monomial& m, const WeightSpec& w) {
  Monomial r;
  int s = m.e[0];
  int phase = 0;
  for (size_t k = 0; k < w.c2.size() && k + 1 < kSlots; ++k) {
    int e2 = m.e[k + 1];
    if (e2 == 0) continue;
    int prod = w.c2[k] * e2;
    if (prod % 2 != 0) throw std::domain_error("evaluation leaves the monomial lattice");
    s += prod / 2;
    int ph = k < w.phase.size() ? w.phase[k] : 0;
    if (ph % 4 != 0) {
      if (e2 % 2 != 0) throw std::domain_error("phase on a half-integer power");
      phase += ph * (e2 / 2);
    }
  }
  r.e[0] = static_cast<int16_t>(s);
  return {GaussRat::phase(phase), r};
}

}  // namespace

LaurentPoly evaluate(const LaurentPoly& p, const WeightSpec& w) {
  return p.map_monomials([&](const Monomial& m) { return eval_monomial(m, w); });
}

RatFn evaluate(const RatFn& f, const WeightSpec& w) {
  return f.substitute([&](const Monomial& m) { return eval_monomial(m, w); });
}

}  // namespace mick
