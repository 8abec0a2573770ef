#include "mick/verma.hpp"

#include <algorithm>
#include <stdexcept>

#include "mick/weight_space.hpp"

namespace mick {

namespace {

constexpr int kTaskDepth = 2;

std::vector<Factor> lcm_of(const FreeElt& x) {
  std::vector<Factor> lcm;
  for (const auto& [w, c] : x.terms())
    for (const auto& f : c.den_factors()) {
      auto it = std::find_if(lcm.begin(), lcm.end(), [&](const Factor& g) { return g.p == f.p; });
      if (it == lcm.end()) lcm.push_back(f);
      else it->mult = std::max(it->mult, f.mult);
    }
  return lcm;
}

LaurentPoly expand_factors(const std::vector<Factor>& fs) {
  LaurentPoly r(1);
  for (const auto& f : fs)
    for (int k = 0; k < f.mult; ++k) r = r * f.p;
  return r;
}

unsigned letter_mask(const Word& w) {
  unsigned m = 0;
  for (char c : w) m |= 1u << static_cast<int>(c);
  return m;
}

template <class Vec>
unsigned letters_of(const Vec& v) {
  unsigned m = 0;
  for (const auto& [w, c] : v) m |= letter_mask(w);
  return m;
}

}  // namespace

PolyVec clear_denominators(const FreeElt& x, RatFn* L) {
  std::vector<Factor> lcm = lcm_of(x);
  PolyVec out;
  out.reserve(x.size());
  for (const auto& [w, c] : x.terms()) {
    std::vector<Factor> rest;
    for (const auto& f : lcm) {
      int have = 0;
      for (const auto& g : c.den_factors())
        if (g.p == f.p) have = g.mult;
      if (f.mult > have) rest.push_back(Factor{f.p, f.mult - have});
    }
    out.emplace_back(w, c.num() * expand_factors(rest));
  }
  if (L) *L = RatFn(expand_factors(lcm));
  return out;
}

PairingKernel::PairingKernel(const RootData& rd, std::vector<Monomial> T) : rd_(rd), T_(std::move(T)) {}

PolyVec PairingKernel::apply_e(int k, const PolyVec& v) const {
  std::map<Word, std::vector<Term>> buckets;
  const Monomial& Tk = T_[k];
  Monomial Tinv = Tk.inverse();
  for (const auto& [w, c] : v) {
    int S = 0;
    for (int p = static_cast<int>(w.size()) - 1; p >= 0; --p) {
      int a = static_cast<int>(w[p]);
      if (a == k) {
        Monomial m1 = Tk * Monomial::q_half(-2 * S);
        Monomial m2 = Tinv * Monomial::q_half(2 * S);
        Word rest = w;
        rest.erase(static_cast<size_t>(p), 1);
        auto& b = buckets[rest];
        b.reserve(b.size() + 2 * c.size());
        for (const auto& t : c.terms()) {
          b.push_back({t.m * m1, t.c});
          b.push_back({t.m * m2, -t.c});
        }
      }
      S += rd_.form(k, a);
    }
  }
  PolyVec out;
  out.reserve(buckets.size());
  for (auto& [w, terms] : buckets) {
    LaurentPoly p = LaurentPoly::from_terms(std::move(terms));
    if (!p.is_zero()) out.emplace_back(w, std::move(p));
  }
  return out;
}

ModVec PairingKernel::apply_e(int k, const ModVec& v, const modp::Point& pt) const {
  std::map<Word, uint64_t> buckets;
  uint64_t tk = pt.value(T_[k]);
  uint64_t tinv = modp::inv(tk);
  uint64_t s2 = modp::mul(pt.v[0], pt.v[0]), s2inv = modp::inv(s2);
  for (const auto& [w, c] : v) {
    int S = 0;
    for (int p = static_cast<int>(w.size()) - 1; p >= 0; --p) {
      int a = static_cast<int>(w[p]);
      if (a == k) {
        uint64_t sp = S >= 0 ? modp::pow(s2, S) : modp::pow(s2inv, -S);
        uint64_t spi = S >= 0 ? modp::pow(s2inv, S) : modp::pow(s2, -S);
        uint64_t mult = modp::sub(modp::mul(tk, spi), modp::mul(tinv, sp));
        Word rest = w;
        rest.erase(static_cast<size_t>(p), 1);
        auto& b = buckets[rest];
        b = modp::add(b, modp::mul(c, mult));
      }
      S += rd_.form(k, a);
    }
  }
  ModVec out;
  for (auto& [w, c] : buckets)
    if (c != 0) out.emplace_back(w, c);
  return out;
}

bool PairingKernel::all_zero_serial(const PolyVec& v, const std::atomic<bool>* stop) const {
  if (stop && stop->load(std::memory_order_relaxed)) return true;
  if (v.empty()) return true;
  if (v[0].first.empty()) return v[0].second.is_zero();
  unsigned mask = letters_of(v);
  for (int k = 1; k <= rd_.n(); ++k) {
    if (!(mask & (1u << k))) continue;
    PolyVec child = apply_e(k, v);
    if (!child.empty() && !all_zero_serial(child, stop)) return false;
  }
  return true;
}

bool PairingKernel::all_zero_mod(const ModVec& v, const modp::Point& pt) const {
  if (v.empty()) return true;
  if (v[0].first.empty()) return v[0].second == 0;
  unsigned mask = letters_of(v);
  for (int k = 1; k <= rd_.n(); ++k) {
    if (!(mask & (1u << k))) continue;
    ModVec child = apply_e(k, v, pt);
    if (!child.empty() && !all_zero_mod(child, pt)) return false;
  }
  return true;
}

bool PairingKernel::par_rec(const PolyVec& v, int depth, std::atomic<bool>& nonzero) const {
  if (v.empty() || v[0].first.empty() || depth >= kTaskDepth) {
    if (!all_zero_serial(v, &nonzero)) nonzero.store(true);
    return !nonzero.load();
  }
  unsigned mask = letters_of(v);
  for (int k = 1; k <= rd_.n(); ++k) {
    if (!(mask & (1u << k))) continue;
#pragma omp task firstprivate(k) shared(v, nonzero)
    {
      if (!nonzero.load(std::memory_order_relaxed)) {
        PolyVec child = apply_e(k, v);
        if (!child.empty()) par_rec(child, depth + 1, nonzero);
      }
    }
  }
#pragma omp taskwait
  return !nonzero.load();
}

bool PairingKernel::all_zero_parallel(const PolyVec& v) const {
  std::atomic<bool> nonzero{false};
#pragma omp parallel
  {
#pragma omp single
    par_rec(v, 0, nonzero);
  }
  return !nonzero.load();
}

namespace {

std::vector<Monomial> symbolic_T(const RootData& rd) {
  std::vector<Monomial> T(rd.n() + 1);
  for (int k = 1; k <= rd.n(); ++k)
    for (int r = 0; r < rd.dim(); ++r) T[k].e[r + 1] = static_cast<int16_t>(2 * rd.simple_root(k)[r]);
  return T;
}

}  // namespace

Verma::Verma(const UqCore& core) : core_(core), kernel_(core.root_data(), symbolic_T(core.root_data())) {}

Verma::~Verma() = default;

FreeElt Verma::act_e(int k, const FreeElt& v) const { return act_e_word(make_word({k}), v); }

FreeElt Verma::act_e_word(const Word& e, const FreeElt& v) const {
  const RootData& rd = root_data();
  RatFn L;
  PolyVec vec = clear_denominators(v, &L);
  for (auto it = e.rbegin(); it != e.rend() && !vec.empty(); ++it) vec = kernel_.apply_e(static_cast<int>(*it), vec);
  FreeElt out;
  if (vec.empty()) return out;
  LaurentPoly den = L.num();
  for (char ch : e) {
    int c = rd.comm_half(static_cast<int>(ch));
    den = den * (LaurentPoly::monomial(Monomial::q_half(c)) - LaurentPoly::monomial(Monomial::q_half(-c)));
  }
  RatFn scale = RatFn(1) / RatFn(den);
  for (auto& [w, p] : vec) out.add_term(w, RatFn(std::move(p)) * scale);
  return out;
}

FreeElt Verma::act_f(int k, const FreeElt& v) const { return FreeElt::letter(k) * v; }

FreeElt Verma::act_qh(int k, const FreeElt& v) const {
  const RootData& rd = root_data();
  FreeElt out;
  for (const auto& [w, coef] : v.terms()) {
    int S = 0;
    for (char a : w) S += rd.form(k, static_cast<int>(a));
    out.add_term(w, coef * RatFn::monomial(kernel_.T()[k] * Monomial::q_half(-2 * S)));
  }
  return out;
}

TensorVec operator+(const TensorVec& a, const TensorVec& b) {
  TensorVec r = a;
  for (const auto& [i, x] : b) {
    auto it = r.find(i);
    if (it == r.end()) r.emplace(i, x);
    else it->second += x;
  }
  for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

TensorVec operator*(const RatFn& c, const TensorVec& a) {
  TensorVec r;
  if (c.is_zero()) return r;
  for (const auto& [i, x] : a) r.emplace(i, c * x);
  return r;
}

TensorVec Verma::act_tensor(Gen g, const TensorVec& x) const {
  const RootData& rd = root_data();
  TensorVec out;
  auto add = [&](int node, const FreeElt& v) {
    if (v.is_zero()) return;
    auto it = out.find(node);
    if (it == out.end()) out.emplace(node, v);
    else it->second += v;
  };
  for (const auto& [i, v] : x) {
    int h = rd.k_weight(g.k, i);
    switch (g.kind) {
      case GenKind::F:
        if (int t = rd.f_target(g.k, i)) add(t, v);
        add(i, q_pow(-h) * act_f(g.k, v));
        break;
      case GenKind::E:
        if (int t = rd.e_target(g.k, i)) add(t, act_qh(g.k, v));
        add(i, act_e(g.k, v));
        break;
      case GenKind::K:
        add(i, q_pow(h) * act_qh(g.k, v));
        break;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

TensorVec Verma::act_word(const Word& w, const TensorVec& x) const {
  TensorVec r = x;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = act_tensor({GenKind::F, static_cast<int>(*it)}, r);
  return r;
}

RatFn Verma::pair(const Word& e_word, const FreeElt& v) const {
  const RootData& rd = root_data();
  RatFn L;
  PolyVec vec;
  {
    FreeElt matching;
    auto target = rd.counts_of(e_word);
    for (const auto& [w, c] : v.terms())
      if (rd.counts_of(w) == target) matching.add_term(w, c);
    vec = clear_denominators(matching, &L);
  }
  for (auto it = e_word.rbegin(); it != e_word.rend() && !vec.empty(); ++it)
    vec = kernel_.apply_e(static_cast<int>(*it), vec);
  if (vec.empty()) return RatFn();
  RatFn r = RatFn(vec[0].second) / L;
  for (char ch : e_word) {
    int c = rd.comm_half(static_cast<int>(ch));
    r = r / (q_half_pow(c) - q_half_pow(-c));
  }
  return r;
}

bool Verma::is_zero_impl(const FreeElt& x, bool parallel) const {
  for (const auto& [counts, comp] : x.components(root_data().n())) {
    PolyVec vec = clear_denominators(comp);
    std::mt19937_64 rng(0x5eed);
    modp::Point pt = modp::Point::random(rng);
    ModVec mv;
    bool ok = true;
    for (const auto& [w, c] : vec) {
      auto val = pt.value(c);
      if (!val) {
        ok = false;
        break;
      }
      if (*val) mv.emplace_back(w, *val);
    }
    if (ok && !kernel_.all_zero_mod(mv, pt)) return false;
    bool zero = parallel ? kernel_.all_zero_parallel(vec) : kernel_.all_zero_serial(vec);
    if (!zero) return false;
  }
  return true;
}

bool Verma::is_zero(const FreeElt& x) const { return is_zero_impl(x, true); }
bool Verma::is_zero_serial(const FreeElt& x) const { return is_zero_impl(x, false); }

bool Verma::is_zero(const TensorVec& x) const {
  for (const auto& [i, v] : x)
    if (!is_zero(v)) return false;
  return true;
}

const WeightSpace& Verma::space(const std::vector<int>& counts) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = spaces_[counts];
  if (!slot) slot = std::make_unique<WeightSpace>(root_data(), counts);
  return *slot;
}

RatFn Verma::graded_project(int j, const TensorVec& x) const {
  const RootData& rd = root_data();
  TensorVec residual = x;
  for (int l = 1; l < j; ++l) {
    auto it = residual.find(l);
    if (it == residual.end()) continue;
    auto comps = it->second.components(rd.n());
    if (comps.size() != 1) throw std::invalid_argument("tensor component is not homogeneous");
    const auto& [counts, X] = *comps.begin();
    const WeightSpace& ws = space(counts);
    std::vector<RatFn> y = ws.dual_coords(X);
    if (std::all_of(y.begin(), y.end(), [](const RatFn& c) { return c.is_zero(); })) {
      residual.erase(it);
      continue;
    }
    std::vector<TensorVec> images;
    std::vector<FreeElt> local;
    for (const auto& b : ws.basis_words()) {
      TensorVec seed{{l, FreeElt::unit()}};
      images.push_back(act_word(b, seed));
      local.push_back(images.back()[l]);
    }
    std::vector<RatFn> d = ws.solve(local, y);
    for (size_t b = 0; b < d.size(); ++b) residual = residual + (-d[b]) * images[b];
    auto rest = residual.find(l);
    if (rest != residual.end()) {
      if (!ws.is_zero(rest->second)) throw std::logic_error("graded projection failed to clear a component");
      residual.erase(rest);
    }
  }
  RatFn c;
  for (const auto& [i, v] : residual) {
    if (i == j) {
      for (const auto& [w, coef] : v.terms()) {
        if (!w.empty()) throw std::invalid_argument("component j has the wrong weight");
        c = coef;
      }
    } else if (i < j || !is_zero(v)) {
      throw std::invalid_argument("vector does not lie in V_j");
    }
  }
  return c;
}

}  // namespace mick
