#include "eigencone/cone.hpp"
#include "eigencone/context.hpp"
#include "eigencone/faces.hpp"
#include "eigencone/oracle.hpp"
#include "eigencone/rays.hpp"
#include "eigencone/schubert.hpp"

#include <benchmark/benchmark.h>

using namespace eigencone;

namespace {

const Context& d4() {
  static const Context c("D4");
  return c;
}

FaceSpec p2_face() {
  const WeylGroup& w = d4().weyl();
  return FaceSpec{3, d4().parabolic({2}),
                  {w.parse("s4 s3 s1 s2"), w.parse("s3 s1 s2 s4 s3 s1 s2"), w.parse("s1 s2 s4 s2 s3 s1 s2")}};
}

void BM_WeylGroup(benchmark::State& state, const char* label) {
  for (auto _ : state) {
    const RootSystem rs = RootSystem::build(label);
    const WeylGroup w(rs);
    benchmark::DoNotOptimize(w.size());
  }
}
BENCHMARK_CAPTURE(BM_WeylGroup, D4, "D4");
BENCHMARK_CAPTURE(BM_WeylGroup, F4, "F4")->Unit(benchmark::kMillisecond);

void BM_ProductTable(benchmark::State& state, const char* label) {
  const RootSystem rs = RootSystem::build(label);
  const WeylGroup w(rs);
  for (auto _ : state) {
    const ProductTable t(w);
    benchmark::DoNotOptimize(t.nonzero_count());
  }
}
BENCHMARK_CAPTURE(BM_ProductTable, A3, "A3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ProductTable, D4, "D4")->Unit(benchmark::kMillisecond);

void BM_FacetEnumeration(benchmark::State& state) {
  d4().products();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_regular_facets(d4(), 3).size());
}
BENCHMARK(BM_FacetEnumeration)->Unit(benchmark::kMillisecond);

void BM_FaceDD(benchmark::State& state) {
  const HRep h = face_hrep(d4(), p2_face());
  for (auto _ : state) benchmark::DoNotOptimize(extremal_rays(h).size());
}
BENCHMARK(BM_FaceDD)->Unit(benchmark::kMillisecond);

void BM_FullConeDD(benchmark::State& state) {
  const HRep h = tensor_cone_hrep(d4(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(extremal_rays(h).size());
}
BENCHMARK(BM_FullConeDD)->Unit(benchmark::kSecond)->Iterations(1);

void BM_ClassifyFace(benchmark::State& state) {
  const FaceSpec f = p2_face();
  for (auto _ : state) benchmark::DoNotOptimize(classify_face(d4(), f).total);
}
BENCHMARK(BM_ClassifyFace)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Weight> ws;
  for (int j : {1, 2, 2}) {
    Weight x = Weight::zero(4);
    x.coords[j] = n;
    ws.push_back(x);
  }
  const RayTuple t(ws);
  OracleOptions opts;
  opts.max_height = 64;
  for (auto _ : state) benchmark::DoNotOptimize(invariant_dim(d4(), t, opts));
}
BENCHMARK(BM_Oracle)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
