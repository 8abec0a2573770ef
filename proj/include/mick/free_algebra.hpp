#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "mick/ratfn.hpp"
#include "mick/root_data.hpp"

namespace mick {

enum class Sign { Lowering, Raising };

// Letters are simple-root indices stored as chars 1..7.
using Word = std::string;

Word make_word(std::initializer_list<int> letters);
std::string word_str(const Word& w, Sign s);

class FreeElt {
 public:
  explicit FreeElt(Sign s = Sign::Lowering) : sign_(s) {}
  static FreeElt unit(Sign s = Sign::Lowering, const RatFn& c = RatFn(1));
  static FreeElt letter(int k, Sign s = Sign::Lowering);
  static FreeElt word(const Word& w, const RatFn& c = RatFn(1), Sign s = Sign::Lowering);

  Sign sign() const { return sign_; }
  const std::map<Word, RatFn>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  RatFn coeff(const Word& w) const;
  void add_term(const Word& w, const RatFn& c);

  FreeElt operator-() const;
  friend FreeElt operator+(const FreeElt& a, const FreeElt& b);
  friend FreeElt operator-(const FreeElt& a, const FreeElt& b);
  friend FreeElt operator*(const FreeElt& a, const FreeElt& b);
  friend FreeElt operator*(const RatFn& c, const FreeElt& a);
  FreeElt& operator+=(const FreeElt& b);
  // literal equality of word expansions
  friend bool operator==(const FreeElt& a, const FreeElt& b);

  FreeElt omega() const;
  FreeElt tau() const;
  FreeElt map_coeffs(const std::function<RatFn(const RatFn&)>& f) const;
  // homogeneous components keyed by letter counts
  std::map<std::vector<int>, FreeElt> components(int rank) const;
  std::string str() const;

 private:
  Sign sign_;
  std::map<Word, RatFn> terms_;
};

FreeElt qcomm(const FreeElt& x, const FreeElt& y, const RatFn& a);

RatFn q_pow(int k);        // q^k
RatFn q_half_pow(int d);   // q^{d/2}

class UqCore {
 public:
  explicit UqCore(const RootData& rd);
  const RootData& root_data() const { return rd_; }

  // composite root vector f_ij
  const FreeElt& f(int i, int j) const;
  // f_{i m_1} f_{m_1 m_2} ... f_{m_k j}
  FreeElt route_product(int i, const Route& r, int j) const;
  Word principal_monomial(int i, int j) const;
  // coefficient of w_j in pi(tau(x)) w_i
  RatFn principal_coefficient(const FreeElt& x, int i, int j) const;
  // q-Serre element for the ordered pair (k, l), k != l
  FreeElt serre(int k, int l) const;

 private:
  RootData rd_;
  mutable std::recursive_mutex mu_;
  mutable std::vector<std::vector<std::unique_ptr<FreeElt>>> cache_;
  FreeElt compute(int i, int j) const;
};

}  // namespace mick
