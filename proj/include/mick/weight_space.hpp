#pragma once

#include <stdexcept>
#include <vector>

#include "mick/verma.hpp"

namespace mick {

struct NotInSpan : std::runtime_error {
  NotInSpan() : std::runtime_error("element is not in the span of the given elements") {}
};

// U_q(g_-) in one weight, seen through the pairing at the fixed weight lambda0 = -2 rho.
// The dual words are chosen so that their pairings are certified independent (rank = Kostant
// number, checked modulo a prime); coordinates are then exact over Q(q^{1/2}).
class WeightSpace {
 public:
  WeightSpace(const RootData& rd, std::vector<int> counts);

  const std::vector<int>& counts() const { return counts_; }
  long dim() const { return dim_; }
  const std::vector<Word>& words() const { return words_; }
  const std::vector<Word>& dual_words() const { return dual_; }
  const std::vector<Word>& basis_words() const { return basis_; }

  // scaled pairings <e, x> at lambda0 for every dual word e
  std::vector<RatFn> dual_coords(const FreeElt& x) const;
  std::vector<uint64_t> dual_coords_mod(const FreeElt& x) const;
  bool is_zero(const FreeElt& x) const;
  // greedy certified-independent subset, in candidate order
  std::vector<size_t> select_independent(const std::vector<FreeElt>& candidates) const;
  // d with sum_b d_b basis_b = x, given x through its dual coordinates
  std::vector<RatFn> solve(const std::vector<FreeElt>& basis, const std::vector<RatFn>& y) const;

 private:
  const RootData& rd_;
  std::vector<int> counts_;
  long dim_ = 0;
  std::vector<Word> words_;
  std::vector<Word> dual_;
  std::vector<Word> basis_;
  PairingKernel kernel0_;
  modp::Point pt_;
  std::vector<uint64_t> row_of(const Word& e) const;
};

}  // namespace mick
