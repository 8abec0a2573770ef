#pragma once

#include <string>
#include <vector>

#include "mick/laurent.hpp"

namespace mick {

enum class Family { A, B, C, D };

struct LieType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;
  static LieType parse(char family, int rank);
  bool orthogonal() const { return family == Family::B || family == Family::D; }
  bool operator==(const LieType&) const = default;
};

// lambda -> (lambda, mu) + c with doubled data; rho is folded into c.
struct AffineForm {
  std::vector<int> mu2;
  int c2 = 0;

  AffineForm operator+(const AffineForm& o) const;
  AffineForm operator-(const AffineForm& o) const;
  AffineForm scaled(int k) const;
  AffineForm plus_const2(int d2) const;
  bool operator==(const AffineForm& o) const;
  bool is_constant() const;
  // doubled value at lambda (doubled coordinates)
  int eval2(const std::vector<int>& lambda2) const;
  // q^{k * form} as a monomial in q^{1/2}, t
  Monomial q_power(int k = 1) const;
  std::string str() const;
};

struct Arc {
  int from;
  int to;
  int label;
};

using Route = std::vector<int>;

class RootData {
 public:
  explicit RootData(LieType type);

  const LieType& type() const { return type_; }
  Family family() const { return type_.family; }
  int n() const { return type_.rank; }
  int N() const { return N_; }
  int dim() const { return dim_; }
  int flip(int i) const { return N_ + 1 - i; }
  int star() const { return N_ % 2 == 1 && family() == Family::B ? (N_ + 1) / 2 : 0; }
  // s: the boundary of the interval Sigma
  int sigma_boundary() const;

  const std::vector<int>& node_weight(int i) const { return node_weights_[i]; }
  const std::vector<int>& rho2() const { return rho2_; }
  const std::vector<int>& simple_root(int k) const { return simple_[k]; }
  int form(int k, int l) const { return form_[k][l]; }
  int cartan(int k, int l) const { return 2 * form_[k][l] / form_[k][k]; }
  // q_k = q^{(alpha_k,alpha_k)/2}; returned as exponent of q^{1/2}
  int qk_half(int k) const { return form_[k][k]; }
  // exponent of q^{1/2} in the denominator q_k - q_k^{-1} of [e_k,f_k]
  int comm_half(int k) const;
  int inner(const std::vector<int>& a, const std::vector<int>& b) const;

  // natural representation: f_k w_i = w_{f_target}, e_k w_i = w_{e_target}; 0 if none
  int f_target(int k, int i) const { return f_target_[k][i]; }
  int e_target(int k, int i) const { return e_target_[k][i]; }
  // K_k w_i = q^{(alpha_k, eps_i)} w_i; exponent of q
  int k_weight(int k, int i) const { return inner(simple_[k], node_weights_[i]); }
  std::vector<std::vector<int>> pi_e(int k) const;
  std::vector<std::vector<int>> pi_f(int k) const;
  std::vector<std::vector<int>> pi_h(int k) const;

  const std::vector<Arc>& arcs() const { return arcs_; }
  bool precedes(int i, int j) const { return less_[i][j]; }
  bool preceq(int i, int j) const { return i == j || less_[i][j]; }
  std::vector<Route> routes(int i, int j) const;
  int path_length(int i, int j) const;
  std::vector<int> lex_path(int i, int j) const;
  std::vector<int> successors(int i) const;    // all l with i < l
  std::vector<int> predecessors(int j) const;  // all l with l < j

  AffineForm weight_form(const std::vector<int>& mu) const;
  AffineForm eta(int i, int j) const;
  AffineForm xi(int i, int j) const;
  int rho_tilde2(int i) const;

  // simple-root coordinates (letter counts) of a weight given in eps coordinates
  std::vector<int> to_simple(const std::vector<int>& eps) const;
  std::vector<int> eps_of(const std::vector<int>& counts) const;
  std::vector<int> counts_of(const std::string& word) const;
  const std::vector<std::vector<int>>& positive_roots() const { return positive_; }
  long kostant(const std::vector<int>& counts) const;

 private:
  LieType type_;
  int N_ = 0;
  int dim_ = 0;
  std::vector<std::vector<int>> node_weights_;
  std::vector<int> rho2_;
  std::vector<std::vector<int>> simple_;
  std::vector<std::vector<int>> form_;
  std::vector<std::vector<int>> f_target_, e_target_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<bool>> less_;
  std::vector<std::vector<int>> positive_;  // simple coordinates
};

}  // namespace mick
