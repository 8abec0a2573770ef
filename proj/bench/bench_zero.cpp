#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "mick/suites.hpp"

using namespace mick;

namespace {

struct Workload {
  std::string name;
  std::vector<PolyVec> parts;
};

double seconds_of(auto&& fn, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

Workload make(const Algebra& g, const std::string& name, const FreeElt& x) {
  Workload w{name, {}};
  for (const auto& [counts, comp] : x.components(g.rd.n())) w.parts.push_back(clear_denominators(comp));
  return w;
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::stoi(argv[1]) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %8s %12s %12s %8s\n", "workload", "words", "serial [s]", "omp [s]", "speedup");
  bool agree = true;
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'B', 3}, {'C', 3}, {'D', 4}, {'A', 4}}) {
    Algebra g(LieType::parse(f, n));
    int N = g.rd.N();
    std::vector<Workload> loads;
    FreeElt top = g.core.f(1, N);
    loads.push_back(make(g, g.rd.type().name() + " f_1N * serre(1,2)", top * g.core.serre(1, 2)));
    loads.push_back(make(g, g.rd.type().name() + " f_1N * serre(2,1)", top * g.core.serre(2, 1)));
    int j = N;
    while (!g.sh.minus_range(j)) --j;
    FreeElt gm = g.sh.gen_minus(j);
    loads.push_back(make(g, g.rd.type().name() + " gen_minus(" + std::to_string(j) + ")", gm));
    for (const auto& w : loads) {
      size_t words = 0;
      for (const auto& p : w.parts) words += p.size();
      bool rs = true, rp = true;
      double ts = seconds_of([&] { rs = true; for (const auto& p : w.parts) rs = g.verma.kernel().all_zero_serial(p) && rs; }, reps);
      double tp = seconds_of([&] { rp = true; for (const auto& p : w.parts) rp = g.verma.kernel().all_zero_parallel(p) && rp; }, reps);
      agree = agree && rs == rp;
      std::printf("%-34s %8zu %12.4f %12.4f %7.2fx%s\n", w.name.c_str(), words, ts, tp, ts / tp, rs == rp ? "" : "  MISMATCH");
    }
  }
  std::printf(agree ? "serial and parallel agree\n" : "serial and parallel DISAGREE\n");
  return agree ? 0 : 1;
}
