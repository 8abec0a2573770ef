#include "mick/weight_space.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace mick {

namespace {

std::vector<Monomial> lambda0_T(const RootData& rd) {
  std::vector<Monomial> T(rd.n() + 1);
  const auto& rho2 = rd.rho2();
  for (int k = 1; k <= rd.n(); ++k) {
    int s = 0;
    for (int r = 0; r < rd.dim(); ++r) s += rd.simple_root(k)[r] * (-2 * rho2[r]);
    T[k] = Monomial::q_half(s);
  }
  return T;
}

uint64_t seed_of(const std::vector<int>& counts) {
  uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (int c : counts) h = (h ^ static_cast<uint64_t>(c + 1)) * 0x100000001b3ULL;
  return h;
}

// incremental row reduction mod p; returns true if v was independent
struct Echelon {
  std::vector<std::vector<uint64_t>> rows;
  std::vector<size_t> pivots;

  bool insert(std::vector<uint64_t> v) {
    for (size_t r = 0; r < rows.size(); ++r) {
      uint64_t c = v[pivots[r]];
      if (!c) continue;
      for (size_t k = 0; k < v.size(); ++k)
        if (rows[r][k]) v[k] = modp::sub(v[k], modp::mul(c, rows[r][k]));
    }
    size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) return false;
    uint64_t inv = modp::inv(v[p]);
    for (auto& x : v) x = modp::mul(x, inv);
    for (auto& row : rows) {
      uint64_t c = row[p];
      if (!c) continue;
      for (size_t k = 0; k < v.size(); ++k)
        if (v[k]) row[k] = modp::sub(row[k], modp::mul(c, v[k]));
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

}  // namespace

WeightSpace::WeightSpace(const RootData& rd, std::vector<int> counts)
    : rd_(rd), counts_(std::move(counts)), kernel0_(rd, lambda0_T(rd)) {
  std::mt19937_64 rng(seed_of(counts_));
  pt_ = modp::Point::random(rng);
  dim_ = rd_.kostant(counts_);
  Word w;
  for (int k = 1; k < static_cast<int>(counts_.size()); ++k) w.append(static_cast<size_t>(counts_[k]), static_cast<char>(k));
  do words_.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));

  Echelon rows;
  std::vector<std::vector<uint64_t>> raw;
  for (const auto& e : words_) {
    if (static_cast<long>(dual_.size()) == dim_) break;
    auto r = row_of(e);
    if (rows.insert(r)) {
      dual_.push_back(e);
      raw.push_back(std::move(r));
    }
  }
  if (static_cast<long>(dual_.size()) != dim_) throw std::logic_error("pairing at lambda0 is degenerate");

  Echelon cols;
  for (size_t c = 0; c < words_.size() && static_cast<long>(basis_.size()) < dim_; ++c) {
    std::vector<uint64_t> col(raw.size());
    for (size_t r = 0; r < raw.size(); ++r) col[r] = raw[r][c];
    if (cols.insert(std::move(col))) basis_.push_back(words_[c]);
  }
}

// row e: scaled pairing of e against every word, modulo p
std::vector<uint64_t> WeightSpace::row_of(const Word& e) const {
  uint64_t s2 = modp::mul(pt_.v[0], pt_.v[0]), s2inv = modp::inv(s2);
  std::vector<uint64_t> tk(rd_.n() + 1), tinv(rd_.n() + 1);
  for (int k = 1; k <= rd_.n(); ++k) {
    tk[k] = pt_.value(kernel0_.T()[k]);
    tinv[k] = modp::inv(tk[k]);
  }
  auto spow = [&](int S) { return S >= 0 ? modp::pow(s2, S) : modp::pow(s2inv, -S); };
  std::unordered_map<Word, uint64_t> memo;
  std::function<uint64_t(const Word&)> val = [&](const Word& u) -> uint64_t {
    if (u.empty()) return 1;
    auto it = memo.find(u);
    if (it != memo.end()) return it->second;
    int k = static_cast<int>(e[u.size() - 1]);
    uint64_t total = 0;
    int S = 0;
    for (int p = static_cast<int>(u.size()) - 1; p >= 0; --p) {
      int a = static_cast<int>(u[p]);
      if (a == k) {
        uint64_t mult = modp::sub(modp::mul(tk[k], spow(-S)), modp::mul(tinv[k], spow(S)));
        Word rest = u;
        rest.erase(static_cast<size_t>(p), 1);
        total = modp::add(total, modp::mul(mult, val(rest)));
      }
      S += rd_.form(k, a);
    }
    memo.emplace(u, total);
    return total;
  };
  std::vector<uint64_t> row;
  row.reserve(words_.size());
  for (const auto& w : words_) row.push_back(val(w));
  return row;
}

std::vector<RatFn> WeightSpace::dual_coords(const FreeElt& x) const {
  std::vector<RatFn> out(dual_.size());
  FreeElt comp;
  for (const auto& [w, c] : x.terms())
    if (rd_.counts_of(w) == counts_) comp.add_term(w, c);
  if (comp.is_zero()) return out;
  RatFn L;
  PolyVec vec = clear_denominators(comp, &L);
  const size_t m = words_.front().size();
  std::vector<size_t> all(dual_.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::function<void(const PolyVec&, const std::vector<size_t>&, size_t)> rec =
      [&](const PolyVec& v, const std::vector<size_t>& idx, size_t depth) {
        if (v.empty()) return;
        if (depth == m) {
          for (size_t i : idx) out[i] = RatFn(v[0].second) / L;
          return;
        }
        std::map<char, std::vector<size_t>> groups;
        for (size_t i : idx) groups[dual_[i][m - 1 - depth]].push_back(i);
        for (const auto& [letter, g] : groups) rec(kernel0_.apply_e(static_cast<int>(letter), v), g, depth + 1);
      };
  rec(vec, all, 0);
  return out;
}

std::vector<uint64_t> WeightSpace::dual_coords_mod(const FreeElt& x) const {
  std::vector<uint64_t> out(dual_.size(), 0);
  ModVec mv;
  for (const auto& [w, c] : x.terms()) {
    if (rd_.counts_of(w) != counts_) continue;
    auto num = pt_.value(c.num());
    auto den = pt_.value(c.den());
    if (!num || !den || *den == 0) throw std::domain_error("coefficient not reducible modulo p");
    uint64_t val = modp::mul(*num, modp::inv(*den));
    if (val) mv.emplace_back(w, val);
  }
  const size_t m = words_.front().size();
  for (size_t i = 0; i < dual_.size(); ++i) {
    ModVec v = mv;
    for (size_t d = 0; d < m && !v.empty(); ++d) v = kernel0_.apply_e(static_cast<int>(dual_[i][m - 1 - d]), v, pt_);
    out[i] = v.empty() ? 0 : v[0].second;
  }
  return out;
}

bool WeightSpace::is_zero(const FreeElt& x) const {
  auto y = dual_coords(x);
  return std::all_of(y.begin(), y.end(), [](const RatFn& c) { return c.is_zero(); });
}

std::vector<size_t> WeightSpace::select_independent(const std::vector<FreeElt>& candidates) const {
  Echelon ech;
  std::vector<size_t> picked;
  for (size_t c = 0; c < candidates.size() && static_cast<long>(picked.size()) < dim_; ++c)
    if (ech.insert(dual_coords_mod(candidates[c]))) picked.push_back(c);
  return picked;
}

std::vector<RatFn> WeightSpace::solve(const std::vector<FreeElt>& basis, const std::vector<RatFn>& y) const {
  const size_t nb = basis.size(), ne = dual_.size();
  std::vector<std::vector<RatFn>> G(ne, std::vector<RatFn>(nb));
  std::vector<std::vector<uint64_t>> Gm(ne, std::vector<uint64_t>(nb));
  for (size_t b = 0; b < nb; ++b) {
    auto col = dual_coords(basis[b]);
    auto colm = dual_coords_mod(basis[b]);
    for (size_t e = 0; e < ne; ++e) {
      G[e][b] = std::move(col[e]);
      Gm[e][b] = colm[e];
    }
  }
  Echelon ech;
  std::vector<size_t> rows;
  for (size_t e = 0; e < ne && rows.size() < nb; ++e)
    if (ech.insert(Gm[e])) rows.push_back(e);
  if (rows.size() < nb) throw std::invalid_argument("solve: basis elements are dependent");

  std::vector<std::vector<RatFn>> A(nb);
  for (size_t r = 0; r < nb; ++r) {
    A[r] = G[rows[r]];
    A[r].push_back(y[rows[r]]);
  }
  for (size_t c = 0; c < nb; ++c) {
    size_t p = c;
    while (p < nb && A[p][c].is_zero()) ++p;
    if (p == nb) throw std::logic_error("solve: singular system");
    std::swap(A[p], A[c]);
    RatFn inv = A[c][c].inverse();
    for (size_t k = c; k <= nb; ++k) A[c][k] = A[c][k] * inv;
    for (size_t r = 0; r < nb; ++r) {
      if (r == c || A[r][c].is_zero()) continue;
      RatFn f = A[r][c];
      for (size_t k = c; k <= nb; ++k)
        if (!A[c][k].is_zero()) A[r][k] -= f * A[c][k];
    }
  }
  std::vector<RatFn> d(nb);
  for (size_t r = 0; r < nb; ++r) d[r] = A[r][nb];
  for (size_t e = 0; e < ne; ++e) {
    RatFn s;
    for (size_t b = 0; b < nb; ++b)
      if (!G[e][b].is_zero() && !d[b].is_zero()) s += G[e][b] * d[b];
    if (!(s == y[e])) throw NotInSpan();
  }
  return d;
}

}  // namespace mick
