#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mick/decomposition.hpp"
#include "mick/raising.hpp"

namespace mick {

// the whole object stack for one algebra
struct Algebra {
  RootData rd;
  UqCore core;
  Verma verma;
  Shapovalov sh;
  Raising ra;
  Decomposition dc;
  explicit Algebra(const LieType& t) : rd(t), core(rd), verma(core), sh(verma), ra(sh), dc(sh) {}
};

struct Check {
  std::string label;
  bool pass;
};

struct SuiteReport {
  std::string suite;
  std::string algebra;
  std::vector<Check> checks;
  double seconds = 0;
  bool pass() const;
  int failures() const;
};

const std::vector<std::string>& suite_names();
// "all" runs every suite that applies to the type; throws std::invalid_argument for unknown names
std::vector<SuiteReport> run_suite(const std::string& suite, const LieType& type, uint64_t seed);

std::string weight_str(const WeightSpec& w);

// seeded weights plus weights on the given zero loci
struct WeightBattery {
  std::vector<WeightSpec> weights;
  std::vector<std::string> kinds;  // "random", "locus", "phase"
};
WeightBattery minus_battery(const Algebra& g, int j, uint64_t seed, int random_count = 100);
WeightBattery plus_battery(const Algebra& g, int j, uint64_t seed, int random_count = 100);

// evaluates basis coefficients at w; throws PoleError if a coefficient has a pole there
FreeElt evaluate_basis(const BasisForm& b, const WeightSpec& w);

}  // namespace mick
