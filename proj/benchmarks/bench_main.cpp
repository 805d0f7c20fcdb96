#include <benchmark/benchmark.h>

#include "metricgeo/embedding.hpp"
#include "metricgeo/martingale.hpp"
#include "metricgeo/reflexivity.hpp"
#include "metricgeo/witness.hpp"

using namespace metricgeo;

static void BM_DiamondGenerate(benchmark::State& state) {
  int level = static_cast<int>(state.range(0));
  for (auto _ : state) {
    DiamondGraph d = diamond(level);
    benchmark::DoNotOptimize(d.graph->vertex_count());
  }
}
BENCHMARK(BM_DiamondGenerate)->Arg(3)->Arg(5)->Arg(6);

static void BM_LaaksoGenerate(benchmark::State& state) {
  int level = static_cast<int>(state.range(0));
  for (auto _ : state) {
    LaaksoGraph g = laakso2(level);
    benchmark::DoNotOptimize(g.graph->vertex_count());
  }
}
BENCHMARK(BM_LaaksoGenerate)->Arg(2)->Arg(4);

static void BM_AllPairs(benchmark::State& state) {
  DiamondGraph d = diamond(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    FiniteMetricSpace space = shortest_path_metric(*d.graph);
    benchmark::DoNotOptimize(space.size());
  }
}
BENCHMARK(BM_AllPairs)->Arg(3)->Arg(4)->Arg(5);

static void BM_StegallDistortion(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  DiamondGraph d = diamond(m);
  StegallEmbedding se = stegall_diamond_embedding(dyadic_l1_tree(m), d);
  FiniteMetricSpace space = shortest_path_metric(*d.graph);
  for (auto _ : state) {
    DistortionResult r = distortion(se.embedding, space);
    benchmark::DoNotOptimize(r.distortion);
  }
}
BENCHMARK(BM_StegallDistortion)->Arg(3)->Arg(4);

static void BM_LaaksoWitness(benchmark::State& state) {
  for (auto _ : state) {
    LaaksoFamily family;
    ThickWitness w = laakso_thick_witness(family, "u", "v");
    benchmark::DoNotOptimize(w.forks());
  }
}
BENCHMARK(BM_LaaksoWitness);

static void BM_WitnessVerification(benchmark::State& state) {
  LaaksoFamily family;
  ThickWitness w = laakso_thick_witness(family, "u", "v");
  for (auto _ : state) {
    WitnessReport r = verify_thick_witness(w, make_rational(1, 2));
    benchmark::DoNotOptimize(r.pass);
  }
}
BENCHMARK(BM_WitnessVerification);

static void BM_MartingaleExtract(benchmark::State& state) {
  int steps = static_cast<int>(state.range(0));
  DiamondGraph d = diamond(3);
  StegallEmbedding se = stegall_diamond_embedding(dyadic_l1_tree(3), d);
  for (auto _ : state) {
    auto family = std::make_shared<DiamondFamily>();
    MartingaleTrace trace = extract_martingale(se.embedding, diamond_oracle(family), "top",
                                               "bottom", steps, ExtractionMode::Geodesic,
                                               Rational(1));
    benchmark::DoNotOptimize(trace.steps.size());
  }
}
BENCHMARK(BM_MartingaleExtract)->Arg(2)->Arg(4);

static void BM_BasicConstant(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  ReflexivityWitness w = prefix_vector_witness(n);
  for (auto _ : state) {
    BasicConstantResult r = basic_constant(w.vectors, w.norm, 0);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_BasicConstant)->Arg(8)->Arg(12);

static void BM_HullSeparation(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<Vec> basis;
  for (int i = 0; i < n; ++i) {
    Vec e(static_cast<size_t>(n), Rational(0));
    e[static_cast<size_t>(i)] = 1;
    basis.push_back(std::move(e));
  }
  for (auto _ : state) {
    Rational sep = convex_hull_separation(basis, n / 2, Norm::l1());
    benchmark::DoNotOptimize(sep.get_d());
  }
}
BENCHMARK(BM_HullSeparation)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
