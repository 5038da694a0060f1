#include <benchmark/benchmark.h>

#include "koszul/bicomplex.hpp"
#include "koszul/complex.hpp"
#include "koszul/ideal.hpp"
#include "koszul/module.hpp"
#include "koszul/theorem.hpp"

using namespace koszul;

namespace {

// Argument: number of variables k for the generic regular-sequence instance.
void BM_MaxMinorsGrade(benchmark::State& st) {
  Instance inst = gen_regular_sequence(static_cast<int>(st.range(0)), static_cast<int>(st.range(0)));
  for (auto _ : st) {
    GradeValue g = grade_of_ideal(max_minors_ideal(inst.psi(), inst.ring()));
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_MaxMinorsGrade)->DenseRange(2, 4);

void BM_HilbertBurchGrade(benchmark::State& st) {
  Instance inst = gen_hilbert_burch(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    GradeValue g = grade_of_ideal(max_minors_ideal(inst.phi(), inst.ring()));
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_HilbertBurchGrade)->DenseRange(2, 4);

// Argument: twist t of C_psi for regular(4,4).
void BM_BuildCPsi(benchmark::State& st) {
  Instance inst = gen_regular_sequence(4, 4);
  int t = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(build_c_psi(inst.ring(), inst.psi(), t));
}
BENCHMARK(BM_BuildCPsi)->DenseRange(-2, 3);

void BM_Bicomplex(benchmark::State& st) {
  Instance inst = gen_hilbert_burch(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    Bicomplex k(inst.ring(), inst.phi(), inst.psi(), 1, 2, 2);
    benchmark::DoNotOptimize(k.anchor());
  }
}
BENCHMARK(BM_Bicomplex)->DenseRange(2, 3);

void BM_HomologyCPsi(benchmark::State& st) {
  Instance inst = gen_hilbert_burch(2);
  int t = static_cast<int>(st.range(0));
  FreeComplex c = build_c_psi(inst.ring(), inst.psi(), t);
  for (auto _ : st) {
    ModuleComplex mc = as_module_complex(c);
    long total = 0;
    for (int i = 0; i < mc.length(); ++i) {
      auto h = hilbert_profile(mc.homology_at(i), 8);
      for (long v : h.values) total += v;
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_HomologyCPsi)->DenseRange(0, 2);

void BM_VerifyFundamental(benchmark::State& st) {
  Instance inst = gen_regular_sequence(4, 4);
  for (auto _ : st) benchmark::DoNotOptimize(verify_fundamental(inst, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_VerifyFundamental)->DenseRange(0, 1);

}  // namespace
BENCHMARK_MAIN();
