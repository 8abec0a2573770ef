#include "mick/root_data.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mick/rational.hpp"
#include "mick/ratfn.hpp"

namespace mick {

std::string LieType::name() const {
  std::ostringstream os;
  switch (family) {
    case Family::A: os << "gl(" << rank + 1 << ")"; break;
    case Family::B: os << "so(" << 2 * rank + 1 << ")"; break;
    case Family::C: os << "sp(" << 2 * rank << ")"; break;
    case Family::D: os << "so(" << 2 * rank << ")"; break;
  }
  return os.str();
}

LieType LieType::parse(char family, int rank) {
  LieType t;
  switch (family) {
    case 'A': case 'a': t.family = Family::A; break;
    case 'B': case 'b': t.family = Family::B; break;
    case 'C': case 'c': t.family = Family::C; break;
    case 'D': case 'd': t.family = Family::D; break;
    default: throw std::invalid_argument(std::string("unknown family ") + family);
  }
  t.rank = rank;
  return t;
}

AffineForm AffineForm::operator+(const AffineForm& o) const {
  AffineForm r = *this;
  for (size_t k = 0; k < r.mu2.size(); ++k) r.mu2[k] += o.mu2[k];
  r.c2 += o.c2;
  return r;
}

AffineForm AffineForm::operator-(const AffineForm& o) const { return *this + o.scaled(-1); }

AffineForm AffineForm::scaled(int k) const {
  AffineForm r = *this;
  for (auto& x : r.mu2) x *= k;
  r.c2 *= k;
  return r;
}

AffineForm AffineForm::plus_const2(int d2) const {
  AffineForm r = *this;
  r.c2 += d2;
  return r;
}

bool AffineForm::operator==(const AffineForm& o) const { return mu2 == o.mu2 && c2 == o.c2; }

bool AffineForm::is_constant() const {
  return std::all_of(mu2.begin(), mu2.end(), [](int x) { return x == 0; });
}

int AffineForm::eval2(const std::vector<int>& lambda2) const {
  int s = 0;
  for (size_t k = 0; k < mu2.size(); ++k) s += mu2[k] * lambda2[k];
  if (s % 2 != 0) throw std::domain_error("affine form value leaves the half-integers");
  return s / 2 + c2;
}

Monomial AffineForm::q_power(int k) const {
  Monomial m;
  m.e[0] = static_cast<int16_t>(k * c2);
  for (size_t i = 0; i < mu2.size(); ++i) m.e[i + 1] = static_cast<int16_t>(k * mu2[i]);
  return m;
}

std::string AffineForm::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < mu2.size(); ++k) {
    if (mu2[k] == 0) continue;
    std::string c = half_str(mu2[k]);
    if (c[0] == '-') {
      os << (first ? "-" : " - ");
      c.erase(0, 1);
    } else if (!first) {
      os << " + ";
    }
    if (c != "1") os << c << "*";
    os << "l" << k + 1;
    first = false;
  }
  if (c2 != 0 || first) {
    std::string c = half_str(c2);
    if (first) os << c;
    else if (c[0] == '-') os << " - " << c.substr(1);
    else os << " + " << c;
  }
  return os.str();
}

RootData::RootData(LieType type) : type_(type) {
  int n = type.rank;
  Family f = type.family;
  if (n < 1 || (f == Family::D && n < 2)) throw std::invalid_argument("invalid rank for " + type.name());
  N_ = f == Family::A ? n + 1 : (f == Family::B ? 2 * n + 1 : 2 * n);
  dim_ = f == Family::A ? n + 1 : n;
  if (dim_ > kMaxT) throw std::invalid_argument("rank too large for the monomial layout");

  auto unit = [&](int k, int s) {
    std::vector<int> v(dim_, 0);
    v[k - 1] = s;
    return v;
  };
  node_weights_.assign(N_ + 1, std::vector<int>(dim_, 0));
  for (int i = 1; i <= N_; ++i) {
    if (f == Family::A || i <= n) node_weights_[i] = unit(i, 1);
    else if (flip(i) <= n) node_weights_[i] = unit(flip(i), -1);
  }
  rho2_.assign(dim_, 0);
  for (int i = 1; i <= dim_; ++i) {
    switch (f) {
      case Family::A: rho2_[i - 1] = N_ + 1 - 2 * i; break;
      case Family::B: rho2_[i - 1] = 2 * n - 2 * i + 1; break;
      case Family::C: rho2_[i - 1] = 2 * (n - i + 1); break;
      case Family::D: rho2_[i - 1] = 2 * (n - i); break;
    }
  }
  simple_.assign(n + 1, {});
  for (int k = 1; k <= n; ++k) {
    std::vector<int> a(dim_, 0);
    if (f == Family::A || k < n) {
      a[k - 1] = 1;
      a[k] = -1;
    } else if (f == Family::B) {
      a[n - 1] = 1;
    } else if (f == Family::C) {
      a[n - 1] = 2;
    } else {
      a[n - 2] = 1;
      a[n - 1] = 1;
    }
    simple_[k] = a;
  }
  form_.assign(n + 1, std::vector<int>(n + 1, 0));
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) form_[k][l] = inner(simple_[k], simple_[l]);

  f_target_.assign(n + 1, std::vector<int>(N_ + 1, 0));
  e_target_.assign(n + 1, std::vector<int>(N_ + 1, 0));
  auto link = [&](int k, int from, int to) {
    f_target_[k][from] = to;
    e_target_[k][to] = from;
  };
  for (int k = 1; k <= n; ++k) {
    if (f == Family::A) {
      link(k, k, k + 1);
    } else if (k < n) {
      link(k, k, k + 1);
      link(k, flip(k) - 1, flip(k));
    } else if (f == Family::B) {
      link(n, n, star());
      link(n, star(), flip(n));
    } else if (f == Family::C) {
      link(n, n, flip(n));
    } else {
      link(n, n - 1, flip(n));
      link(n, n, flip(n) + 1);
    }
  }
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= N_; ++i)
      if (f_target_[k][i] != 0) arcs_.push_back({i, f_target_[k][i], k});
  std::sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) {
    return std::tie(a.from, a.to, a.label) < std::tie(b.from, b.to, b.label);
  });

  less_.assign(N_ + 1, std::vector<bool>(N_ + 1, false));
  for (int i = N_; i >= 1; --i)
    for (const auto& a : arcs_)
      if (a.from == i) {
        less_[i][a.to] = true;
        for (int j = 1; j <= N_; ++j)
          if (less_[a.to][j]) less_[i][j] = true;
      }

  std::vector<std::vector<int>> pos_eps;
  auto e = [&](int i) { return unit(i, 1); };
  auto add = [](std::vector<int> a, const std::vector<int>& b, int s) {
    for (size_t k = 0; k < a.size(); ++k) a[k] += s * b[k];
    return a;
  };
  if (f == Family::A) {
    for (int i = 1; i <= N_; ++i)
      for (int j = i + 1; j <= N_; ++j) pos_eps.push_back(add(e(i), e(j), -1));
  } else {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        pos_eps.push_back(add(e(i), e(j), -1));
        pos_eps.push_back(add(e(i), e(j), 1));
      }
    for (int i = 1; i <= n; ++i) {
      if (f == Family::B) pos_eps.push_back(e(i));
      if (f == Family::C) pos_eps.push_back(add(e(i), e(i), 1));
    }
  }
  for (const auto& r : pos_eps) positive_.push_back(to_simple(r));
}

int RootData::sigma_boundary() const { return family() == Family::D ? n() - 1 : n(); }

int RootData::comm_half(int k) const {
  if (family() == Family::B && k == n()) return 2;
  return form_[k][k];
}

int RootData::inner(const std::vector<int>& a, const std::vector<int>& b) const {
  int s = 0;
  for (int k = 0; k < dim_; ++k) s += a[k] * b[k];
  return s;
}

std::vector<std::vector<int>> RootData::pi_e(int k) const {
  std::vector<std::vector<int>> m(N_ + 1, std::vector<int>(N_ + 1, 0));
  for (int i = 1; i <= N_; ++i)
    if (e_target_[k][i]) m[e_target_[k][i]][i] = 1;
  return m;
}

std::vector<std::vector<int>> RootData::pi_f(int k) const {
  std::vector<std::vector<int>> m(N_ + 1, std::vector<int>(N_ + 1, 0));
  for (int i = 1; i <= N_; ++i)
    if (f_target_[k][i]) m[f_target_[k][i]][i] = 1;
  return m;
}

std::vector<std::vector<int>> RootData::pi_h(int k) const {
  std::vector<std::vector<int>> m(N_ + 1, std::vector<int>(N_ + 1, 0));
  for (int i = 1; i <= N_; ++i) m[i][i] = k_weight(k, i);
  return m;
}

std::vector<Route> RootData::routes(int i, int j) const {
  std::vector<Route> out;
  if (i == j) {
    out.push_back({});
    return out;
  }
  if (!precedes(i, j)) return out;
  std::vector<int> inner_nodes;
  for (int m = i + 1; m < j; ++m)
    if (precedes(i, m) && precedes(m, j)) inner_nodes.push_back(m);
  Route cur;
  std::function<void(size_t)> rec = [&](size_t start) {
    out.push_back(cur);
    for (size_t k = start; k < inner_nodes.size(); ++k) {
      int m = inner_nodes[k];
      if (!cur.empty() && !precedes(cur.back(), m)) continue;
      cur.push_back(m);
      rec(k + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::stable_sort(out.begin(), out.end(), [](const Route& a, const Route& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

int RootData::path_length(int i, int j) const {
  if (i == j) return 0;
  std::vector<int> dist(N_ + 1, -1);
  std::deque<int> queue{i};
  dist[i] = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (const auto& a : arcs_)
      if (a.from == x && dist[a.to] < 0) {
        dist[a.to] = dist[x] + 1;
        queue.push_back(a.to);
      }
  }
  if (dist[j] < 0) throw std::invalid_argument("nodes are not comparable");
  return dist[j];
}

std::vector<int> RootData::lex_path(int i, int j) const {
  if (!preceq(i, j)) throw std::invalid_argument("nodes are not comparable");
  std::vector<int> path{i};
  while (path.back() != j) {
    int best = 0;
    for (const auto& a : arcs_)
      if (a.from == path.back() && preceq(a.to, j) && (best == 0 || a.to < best)) best = a.to;
    path.push_back(best);
  }
  return path;
}

std::vector<int> RootData::successors(int i) const {
  std::vector<int> out;
  for (int l = 1; l <= N_; ++l)
    if (precedes(i, l)) out.push_back(l);
  return out;
}

std::vector<int> RootData::predecessors(int j) const {
  std::vector<int> out;
  for (int l = 1; l <= N_; ++l)
    if (precedes(l, j)) out.push_back(l);
  return out;
}

AffineForm RootData::weight_form(const std::vector<int>& mu) const {
  AffineForm a;
  a.mu2.resize(dim_);
  for (int k = 0; k < dim_; ++k) a.mu2[k] = 2 * mu[k];
  return a;
}

AffineForm RootData::eta(int i, int j) const {
  std::vector<int> v(dim_);
  for (int k = 0; k < dim_; ++k) v[k] = node_weights_[i][k] - node_weights_[j][k];
  AffineForm a = weight_form(v);
  int rv = 0;
  for (int k = 0; k < dim_; ++k) rv += rho2_[k] * v[k];
  a.c2 = rv - inner(v, v);
  return a;
}

AffineForm RootData::xi(int i, int j) const {
  std::vector<int> v(dim_);
  for (int k = 0; k < dim_; ++k) v[k] = node_weights_[i][k] - node_weights_[j][k];
  AffineForm a = weight_form(v);
  int rv = 0;
  for (int k = 0; k < dim_; ++k) rv += rho2_[k] * v[k];
  a.c2 = rv + inner(node_weights_[i], node_weights_[i]) - inner(node_weights_[j], node_weights_[j]);
  return a;
}

int RootData::rho_tilde2(int i) const {
  int r = 0;
  for (int k = 0; k < dim_; ++k) r += rho2_[k] * node_weights_[i][k];
  return r + inner(node_weights_[i], node_weights_[i]);
}

std::vector<int> RootData::to_simple(const std::vector<int>& eps) const {
  int n = this->n();
  std::vector<std::vector<Rat>> m(dim_, std::vector<Rat>(n + 1));
  for (int r = 0; r < dim_; ++r) {
    for (int k = 1; k <= n; ++k) m[r][k - 1] = Rat(simple_[k][r]);
    m[r][n] = Rat(eps[r]);
  }
  int row = 0;
  std::vector<int> pivot_row(n, -1);
  for (int c = 0; c < n && row < dim_; ++c) {
    int p = row;
    while (p < dim_ && m[p][c].is_zero()) ++p;
    if (p == dim_) continue;
    std::swap(m[p], m[row]);
    Rat inv = m[row][c].inverse();
    for (auto& x : m[row]) x = x * inv;
    for (int r = 0; r < dim_; ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      Rat f = m[r][c];
      for (int cc = 0; cc <= n; ++cc) m[r][cc] = m[r][cc] - f * m[row][cc];
    }
    pivot_row[c] = row++;
  }
  for (int r = row; r < dim_; ++r)
    if (!m[r][n].is_zero()) throw std::invalid_argument("weight outside the root lattice");
  std::vector<int> out(n + 1, 0);
  for (int c = 0; c < n; ++c) {
    const Rat& v = m[pivot_row[c]][n];
    if (!v.is_integer() || !v.is_small()) throw std::invalid_argument("weight outside the root lattice");
    out[c + 1] = static_cast<int>(v.small_num());
  }
  return out;
}

std::vector<int> RootData::eps_of(const std::vector<int>& counts) const {
  std::vector<int> v(dim_, 0);
  for (int k = 1; k <= n(); ++k)
    for (int r = 0; r < dim_; ++r) v[r] += counts[k] * simple_[k][r];
  return v;
}

std::vector<int> RootData::counts_of(const std::string& word) const {
  std::vector<int> c(n() + 1, 0);
  for (char ch : word) ++c[static_cast<int>(ch)];
  return c;
}

long RootData::kostant(const std::vector<int>& counts) const {
  std::map<std::pair<std::vector<int>, size_t>, long> memo;
  std::function<long(const std::vector<int>&, size_t)> rec = [&](const std::vector<int>& rest, size_t r) -> long {
    if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) return 1;
    if (r == positive_.size()) return 0;
    auto key = std::make_pair(rest, r);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long total = 0;
    std::vector<int> cur = rest;
    while (true) {
      total += rec(cur, r + 1);
      bool ok = true;
      for (size_t k = 0; k < cur.size(); ++k) {
        cur[k] -= positive_[r][k];
        if (cur[k] < 0) ok = false;
      }
      if (!ok) break;
    }
    memo[key] = total;
    return total;
  };
  return rec(counts, 0);
}

}  // namespace mick
