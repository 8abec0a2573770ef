#include "mick/laurent.hpp"

#include <algorithm>

namespace mick {

LaurentPoly::LaurentPoly(GaussRat c) {
  if (!c.is_zero()) terms_.push_back({Monomial{}, std::move(c)});
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, GaussRat c) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.m < b.m; });
  LaurentPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c += t.c;
      if (p.terms_.back().c.is_zero()) p.terms_.pop_back();
    } else if (!t.c.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool LaurentPoly::t_free() const {
  for (const auto& t : terms_)
    if (!t.m.t_free()) return false;
  return true;
}

bool LaurentPoly::has_imaginary() const {
  for (const auto& t : terms_)
    if (!t.c.is_real()) return true;
  return false;
}

Monomial LaurentPoly::min_exponents() const {
  Monomial r;
  if (terms_.empty()) return r;
  r = terms_[0].m;
  for (const auto& t : terms_)
    for (int k = 0; k < kSlots; ++k) r.e[k] = std::min(r.e[k], t.m.e[k]);
  return r;
}

Monomial LaurentPoly::max_exponents() const {
  Monomial r;
  if (terms_.empty()) return r;
  r = terms_[0].m;
  for (const auto& t : terms_)
    for (int k = 0; k < kSlots; ++k) r.e[k] = std::max(r.e[k], t.m.e[k]);
  return r;
}

GaussRat LaurentPoly::constant_term() const {
  for (const auto& t : terms_)
    if (t.m.is_unit()) return t.c;
  return GaussRat(0);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

namespace {

template <bool Subtract>
LaurentPoly merge(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].m < b[j].m)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].m < a[i].m) {
      out.push_back(Subtract ? Term{b[j].m, -b[j].c} : b[j]);
      ++j;
    } else {
      GaussRat c = Subtract ? a[i].c - b[j].c : a[i].c + b[j].c;
      if (!c.is_zero()) out.push_back({a[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  return LaurentPoly::from_sorted(std::move(out));
}

}  // namespace

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return merge<false>(a.terms_, b.terms_);
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) return a;
  return merge<true>(a.terms_, b.terms_);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  if (a.terms_.size() == 1) return b.times(a.terms_[0].m).scaled(a.terms_[0].c);
  if (b.terms_.size() == 1) return a.times(b.terms_[0].m).scaled(b.terms_[0].c);
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) out.push_back({x.m * y.m, x.c * y.c});
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly LaurentPoly::scaled(const GaussRat& c) const {
  if (c.is_zero()) return LaurentPoly();
  if (c.is_one()) return *this;
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.c = t.c * c;
  return r;
}

LaurentPoly LaurentPoly::times(const Monomial& m) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.m = t.m * m;
  return r;
}

LaurentPoly LaurentPoly::pow(int n) const {
  LaurentPoly r(1);
  for (int k = 0; k < n; ++k) r = r * *this;
  return r;
}

void LaurentPoly::add_scaled(const LaurentPoly& b, const GaussRat& c, const Monomial& m) {
  std::vector<Term> out;
  out.reserve(terms_.size() + b.terms_.size());
  size_t i = 0, j = 0;
  const auto& a = terms_;
  while (i < a.size() || j < b.terms_.size()) {
    if (j == b.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    Monomial bm = b.terms_[j].m * m;
    if (i < a.size() && a[i].m < bm) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == a.size() || bm < a[i].m) {
      out.push_back({bm, b.terms_[j].c * c});
      ++j;
    } else {
      GaussRat s = a[i].c + b.terms_[j].c * c;
      if (!s.is_zero()) out.push_back({bm, std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentPoly();
  if (d.terms_.size() == 1) {
    GaussRat inv = d.terms_[0].c.inverse();
    return times(d.terms_[0].m.inverse()).scaled(inv);
  }
  Monomial mp = min_exponents(), md = d.min_exponents();
  LaurentPoly r = times(mp.inverse());
  LaurentPoly dd = d.times(md.inverse());
  Monomial rmax = r.max_exponents(), dmax = dd.max_exponents();
  if (!dmax.divides(rmax)) return std::nullopt;
  if (r.terms_.size() < 2) return std::nullopt;

  const Term& lead = dd.terms_.back();
  GaussRat lead_inv = lead.c.inverse();
  std::vector<Term> quot;
  while (!r.is_zero()) {
    const Term& lt = r.terms_.back();
    if (!lead.m.divides(lt.m)) return std::nullopt;
    Monomial qm = lt.m * lead.m.inverse();
    GaussRat qc = lt.c * lead_inv;
    r.add_scaled(dd, -qc, qm);
    quot.push_back({qm, std::move(qc)});
  }
  std::reverse(quot.begin(), quot.end());
  LaurentPoly q;
  q.terms_ = std::move(quot);
  return q.times(mp * md.inverse());
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].m != b.terms_[k].m || !(a.terms_[k].c == b.terms_[k].c)) return false;
  return true;
}

int compare(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  for (size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].m != b.terms_[k].m) return a.terms_[k].m < b.terms_[k].m ? -1 : 1;
    int c = compare(a.terms_[k].c, b.terms_[k].c);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace mick
