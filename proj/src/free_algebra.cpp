#include "mick/free_algebra.hpp"

#include <stdexcept>

namespace mick {

Word make_word(std::initializer_list<int> letters) {
  Word w;
  for (int k : letters) w.push_back(static_cast<char>(k));
  return w;
}

std::string word_str(const Word& w, Sign s) {
  if (w.empty()) return "1";
  std::string out;
  for (char c : w) {
    if (!out.empty()) out += "*";
    out += (s == Sign::Lowering ? "f" : "e") + std::to_string(static_cast<int>(c));
  }
  return out;
}

RatFn q_pow(int k) { return RatFn::monomial(Monomial::q(k)); }
RatFn q_half_pow(int d) { return RatFn::monomial(Monomial::q_half(d)); }

FreeElt FreeElt::unit(Sign s, const RatFn& c) {
  FreeElt x(s);
  x.add_term(Word(), c);
  return x;
}

FreeElt FreeElt::letter(int k, Sign s) { return word(make_word({k}), RatFn(1), s); }

FreeElt FreeElt::word(const Word& w, const RatFn& c, Sign s) {
  FreeElt x(s);
  x.add_term(w, c);
  return x;
}

RatFn FreeElt::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFn() : it->second;
}

void FreeElt::add_term(const Word& w, const RatFn& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FreeElt FreeElt::operator-() const {
  FreeElt r(sign_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

FreeElt& FreeElt::operator+=(const FreeElt& b) {
  if (b.sign_ != sign_ && !b.is_zero() && !is_zero()) throw std::invalid_argument("mixed signs");
  if (is_zero()) sign_ = b.sign_;
  for (const auto& [w, c] : b.terms_) add_term(w, c);
  return *this;
}

FreeElt operator+(const FreeElt& a, const FreeElt& b) {
  FreeElt r = a;
  r += b;
  return r;
}

FreeElt operator-(const FreeElt& a, const FreeElt& b) { return a + (-b); }

FreeElt operator*(const FreeElt& a, const FreeElt& b) {
  if (a.sign_ != b.sign_) throw std::invalid_argument("mixed signs");
  FreeElt r(a.sign_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
  return r;
}

FreeElt operator*(const RatFn& c, const FreeElt& a) {
  FreeElt r(a.sign_);
  if (c.is_zero()) return r;
  for (const auto& [w, x] : a.terms_) r.terms_.emplace(w, c * x);
  return r;
}

bool operator==(const FreeElt& a, const FreeElt& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [w, c] : a.terms_) {
    if (w != it->first || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

FreeElt FreeElt::omega() const {
  FreeElt r = *this;
  r.sign_ = sign_ == Sign::Lowering ? Sign::Raising : Sign::Lowering;
  return r;
}

FreeElt FreeElt::tau() const {
  if (sign_ != Sign::Lowering) throw std::invalid_argument("tau is defined on lowering elements");
  FreeElt r(sign_);
  for (const auto& [w, c] : terms_) r.add_term(Word(w.rbegin(), w.rend()), c);
  return r;
}

FreeElt FreeElt::map_coeffs(const std::function<RatFn(const RatFn&)>& f) const {
  FreeElt r(sign_);
  for (const auto& [w, c] : terms_) r.add_term(w, f(c));
  return r;
}

std::map<std::vector<int>, FreeElt> FreeElt::components(int rank) const {
  std::map<std::vector<int>, FreeElt> out;
  for (const auto& [w, c] : terms_) {
    std::vector<int> counts(rank + 1, 0);
    for (char ch : w) ++counts[static_cast<int>(ch)];
    auto it = out.try_emplace(counts, FreeElt(sign_)).first;
    it->second.terms_.emplace(w, c);
  }
  return out;
}

std::string FreeElt::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string ws = word_str(w, sign_);
    if (c == RatFn(1)) out += ws;
    else if (w.empty()) out += "(" + c.str() + ")";
    else out += "(" + c.str() + ")*" + ws;
  }
  return out;
}

FreeElt qcomm(const FreeElt& x, const FreeElt& y, const RatFn& a) {
  if (x.sign() != y.sign() && !x.is_zero() && !y.is_zero()) throw std::invalid_argument("mixed signs");
  return x * y - a * (y * x);
}

UqCore::UqCore(const RootData& rd) : rd_(rd) {
  cache_.resize(rd_.N() + 1);
  for (auto& row : cache_) row.resize(rd_.N() + 1);
}

const FreeElt& UqCore::f(int i, int j) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto& slot = cache_[i][j];
  if (!slot) slot = std::make_unique<FreeElt>(compute(i, j));
  return *slot;
}

FreeElt UqCore::compute(int i, int j) const {
  using L = FreeElt;
  if (i == j) return L::unit();
  if (i > j || !rd_.precedes(i, j)) return L();
  const int n = rd_.n();
  const RatFn qb = q_pow(-1);
  auto chain_up = [&](int a, int b) {
    L x = L::letter(a);
    for (int k = a + 1; k < b; ++k) x = qcomm(L::letter(k), x, qb);
    return x;
  };
  auto chain_down = [&](int a, int b) {
    L x = L::letter(a);
    for (int k = a + 1; k < b; ++k) x = qcomm(x, L::letter(k), qb);
    return x;
  };
  Family fam = rd_.family();
  if (fam == Family::A) return chain_up(i, j);
  int star = rd_.star();
  int upper_top = fam == Family::B ? star : n;
  int lower_bot = fam == Family::B ? star : n + 1;
  if (j <= upper_top) return chain_up(i, j);
  if (i >= lower_bot) return chain_down(rd_.flip(j), rd_.flip(i));

  int jp = rd_.flip(j);
  switch (fam) {
    case Family::B: {
      int d = i == jp ? 1 : 0;
      return q_pow(d) * qcomm(f(star, j), f(i, star), q_pow(-d));
    }
    case Family::C: {
      if (i == n && j == n + 1) return (q_pow(1) + q_pow(-1)) * L::letter(n);
      if (j == n + 1) return qcomm(L::letter(n), f(i, n), q_pow(-2));
      if (i == n) return qcomm(f(n + 1, j), L::letter(n), q_pow(-2));
      int d = i == jp ? 1 : 0;
      return q_pow(d) * qcomm(f(n, j), f(i, n), q_pow(-1 - d));
    }
    case Family::D: {
      if ((i == n - 1 && j == n + 1) || (i == n && j == n + 2)) return L::letter(n);
      if (j == n + 1) return qcomm(L::letter(n), f(i, n - 1), qb);
      if (i == n) return qcomm(f(n + 2, j), L::letter(n), qb);
      int d = i == jp ? 1 : 0;
      return q_pow(d) * qcomm(f(n, j), f(i, n), q_pow(-1 - d));
    }
    default:
      break;
  }
  return L();
}

FreeElt UqCore::route_product(int i, const Route& r, int j) const {
  FreeElt x = FreeElt::unit();
  int prev = i;
  for (int m : r) {
    x = x * f(prev, m);
    prev = m;
  }
  return x * f(prev, j);
}

Word UqCore::principal_monomial(int i, int j) const {
  if (!rd_.precedes(i, j)) throw std::invalid_argument("principal monomial needs i < j in the order");
  auto path = rd_.lex_path(i, j);
  Word w;
  for (size_t k = 0; k + 1 < path.size(); ++k)
    for (const auto& a : rd_.arcs())
      if (a.from == path[k] && a.to == path[k + 1]) w.push_back(static_cast<char>(a.label));
  return w;
}

RatFn UqCore::principal_coefficient(const FreeElt& x, int i, int j) const {
  RatFn r;
  for (const auto& [w, c] : x.terms()) {
    int node = i;
    for (char ch : w) {
      node = rd_.f_target(static_cast<int>(ch), node);
      if (node == 0) break;
    }
    if (node == j) r += c;
  }
  return r;
}

namespace {

// [x]_b for a base monomial b
RatFn qnum_base(int base_half, int x) {
  Monomial b = Monomial::q_half(base_half);
  LaurentPoly num = LaurentPoly::monomial(b.pow(x)) - LaurentPoly::monomial(b.pow(-x));
  LaurentPoly den = LaurentPoly::monomial(b) - LaurentPoly::monomial(b.inverse());
  return RatFn::fraction(num, den);
}

RatFn qbinom(int base_half, int m, int r) {
  RatFn num(1), den(1);
  for (int k = 0; k < r; ++k) {
    num *= qnum_base(base_half, m - k);
    den *= qnum_base(base_half, k + 1);
  }
  return num / den;
}

}  // namespace

FreeElt UqCore::serre(int k, int l) const {
  int m = 1 - rd_.cartan(k, l);
  FreeElt fk = FreeElt::letter(k), fl = FreeElt::letter(l);
  auto power = [&](int e) {
    FreeElt x = FreeElt::unit();
    for (int t = 0; t < e; ++t) x = x * fk;
    return x;
  };
  FreeElt out;
  for (int r = 0; r <= m; ++r) {
    RatFn c = qbinom(rd_.qk_half(k), m, r);
    if (r % 2 == 1) c = -c;
    out += c * (power(m - r) * fl * power(r));
  }
  return out;
}

}  // namespace mick
