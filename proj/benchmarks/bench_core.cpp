#include <benchmark/benchmark.h>

#include <f4rigid/chartable.hpp>
#include <f4rigid/json_io.hpp>
#include <f4rigid/levirep.hpp>
#include <f4rigid/permgroup.hpp>
#include <f4rigid/qpoly.hpp>
#include <f4rigid/rigidity.hpp>
#include <f4rigid/torus.hpp>
#include <f4rigid/verifier.hpp>
#include <f4rigid/weyl.hpp>

namespace {

using namespace f4rigid;

const IMat kF4Cartan{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};

const RootDatum& f4() {
  static const RootDatum d = generate_roots(build_root_datum(kF4Cartan, "F4"));
  return d;
}

const WeylGroup& wf4() {
  static const WeylGroup g = enumerate_weyl(f4());
  return g;
}

void BM_GenerateRootsF4(benchmark::State& state) {
  const RootDatum base = build_root_datum(kF4Cartan, "F4");
  for (auto _ : state) benchmark::DoNotOptimize(generate_roots(base).roots.size());
}
BENCHMARK(BM_GenerateRootsF4);

void BM_EnumerateWeylF4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_weyl(f4()).size());
}
BENCHMARK(BM_EnumerateWeylF4);

void BM_ConjugacyClassesWeylF4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_classes(wf4()).size());
}
BENCHMARK(BM_ConjugacyClassesWeylF4);

void BM_PoincarePolyF4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(poincare_poly(wf4()).degree());
}
BENCHMARK(BM_PoincarePolyF4);

void BM_SemisimpleClasses(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(semisimple_classes(f4(), n).size());
}
BENCHMARK(BM_SemisimpleClasses)->Arg(2)->Arg(3)->Arg(4);

void BM_InvolutionFusion(benchmark::State& state) {
  const int levi = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(involution_fusion(f4(), levi).rows.size());
}
BENCHMARK(BM_InvolutionFusion)->Arg(1)->Arg(4);

void BM_VerifyAllParabolics(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(f4()).size());
}
BENCHMARK(BM_VerifyAllParabolics);

void BM_TorusOrdersAllClasses(benchmark::State& state) {
  const auto classes = conjugacy_classes(wf4());
  for (auto _ : state) {
    int degree_sum = 0;
    for (const auto& c : classes) degree_sum += torus_order_poly(c.representative).degree();
    benchmark::DoNotOptimize(degree_sum);
  }
}
BENCHMARK(BM_TorusOrdersAllClasses);

const PermGroup& a5() {
  static const PermGroup g(5, {{1, 2, 0, 3, 4}, {0, 1, 3, 4, 2}});
  return g;
}

const ClassPartition& a5_classes() {
  static const ClassPartition p = conjugacy_classes_perm(a5());
  return p;
}

void BM_ConjugacyClassesA5(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_classes_perm(a5()).classes.size());
}
BENCHMARK(BM_ConjugacyClassesA5);

void BM_CountTriplesA5(benchmark::State& state) {
  const auto& p = a5_classes();
  const int c2 = p.index_of_name("2a"), c3 = p.index_of_name("3a"), c5 = p.index_of_name("5a");
  for (auto _ : state) benchmark::DoNotOptimize(count_triples(a5(), p, c2, c3, c5));
}
BENCHMARK(BM_CountTriplesA5);

void BM_RigidityA5(benchmark::State& state) {
  const auto& p = a5_classes();
  const int c2 = p.index_of_name("2a"), c3 = p.index_of_name("3a"), c5 = p.index_of_name("5a");
  for (auto _ : state) benchmark::DoNotOptimize(is_rigid(a5(), p, c2, c3, c5).orbit_count);
}
BENCHMARK(BM_RigidityA5);

}  // namespace

BENCHMARK_MAIN();
