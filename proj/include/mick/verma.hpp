#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "mick/free_algebra.hpp"
#include "mick/modp.hpp"

namespace mick {

// Vectors of M_lambda are lowering elements applied to v_lambda.
using VermaVec = FreeElt;
// V (x) M_lambda: node i -> Verma component at w_i.
using TensorVec = std::map<int, FreeElt>;

enum class GenKind { E, F, K };
struct Gen {
  GenKind kind;
  int k;
};

using PolyVec = std::vector<std::pair<Word, LaurentPoly>>;
using ModVec = std::vector<std::pair<Word, uint64_t>>;

// Clears denominators of a FreeElt: x = vec / L.
PolyVec clear_denominators(const FreeElt& x, RatFn* L = nullptr);

// Scaled raising action e_k on word vectors; the constant 1/(q_k - q_k^{-1}) is dropped.
// T[k] is the monomial standing for q^{(alpha_k, lambda)}.
class PairingKernel {
 public:
  PairingKernel(const RootData& rd, std::vector<Monomial> T);
  PolyVec apply_e(int k, const PolyVec& v) const;
  ModVec apply_e(int k, const ModVec& v, const modp::Point& pt) const;
  // true iff every pairing of v against raising words vanishes
  bool all_zero_serial(const PolyVec& v, const std::atomic<bool>* stop = nullptr) const;
  bool all_zero_parallel(const PolyVec& v) const;
  bool all_zero_mod(const ModVec& v, const modp::Point& pt) const;
  const std::vector<Monomial>& T() const { return T_; }

 private:
  const RootData& rd_;
  std::vector<Monomial> T_;
  bool par_rec(const PolyVec& v, int depth, std::atomic<bool>& nonzero) const;
};

class WeightSpace;

class Verma {
 public:
  explicit Verma(const UqCore& core);
  ~Verma();
  const UqCore& core() const { return core_; }
  const RootData& root_data() const { return core_.root_data(); }

  FreeElt act_e(int k, const FreeElt& v) const;
  // raising word applied letter by letter (rightmost first)
  FreeElt act_e_word(const Word& e, const FreeElt& v) const;
  FreeElt act_f(int k, const FreeElt& v) const;
  FreeElt act_qh(int k, const FreeElt& v) const;
  // lowering word applied letter by letter (rightmost first)
  TensorVec act_word(const Word& w, const TensorVec& x) const;
  TensorVec act_tensor(Gen g, const TensorVec& x) const;
  RatFn pair(const Word& e_word, const FreeElt& v) const;

  bool is_zero(const FreeElt& x) const;
  bool is_zero_serial(const FreeElt& x) const;
  bool is_zero(const TensorVec& x) const;

  // scalar C with x = C w_j (x) v_lambda modulo V_{j-1}
  RatFn graded_project(int j, const TensorVec& x) const;

  const WeightSpace& space(const std::vector<int>& counts) const;
  const PairingKernel& kernel() const { return kernel_; }

 private:
  const UqCore& core_;
  PairingKernel kernel_;
  mutable std::mutex mu_;
  mutable std::map<std::vector<int>, std::unique_ptr<WeightSpace>> spaces_;
  bool is_zero_impl(const FreeElt& x, bool parallel) const;
};

TensorVec operator+(const TensorVec& a, const TensorVec& b);
TensorVec operator*(const RatFn& c, const TensorVec& a);

}  // namespace mick
