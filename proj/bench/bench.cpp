// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "powerph/cycles.hpp"
#include "powerph/generators.hpp"
#include "powerph/geometry.hpp"
#include "powerph/persistence.hpp"

using namespace powerph;

namespace {

struct Surface {
  Graph g;
  DistanceMatrix dm;
  SupportComplex s;
  explicit Surface(std::size_t m) : g(tetrahedron_surface(m)), dm(shortest_paths(g)), s(make(m, dm)) {}
  static SupportComplex make(std::size_t m, const DistanceMatrix& dm) {
    std::vector<std::vector<Vertex>> tris;
    for (const auto& t : tetrahedron_surface_triangles(m)) tris.push_back({t[0], t[1], t[2]});
    return SupportComplex(2, tris, dm, 1);
  }
};

template <bool Parallel>
void BM_shortest_paths(benchmark::State& state) {
  auto g = gnp_random(static_cast<std::size_t>(state.range(0)), 0.05, 1);
  for (auto _ : state) benchmark::DoNotOptimize(Parallel ? shortest_paths(g) : shortest_paths_serial(g));
}

template <bool Parallel>
void BM_build_filtration(benchmark::State& state) {
  auto dm = shortest_paths(cycle_graph(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    auto fc = Parallel ? build_filtration(dm, 3, dm.diameter()) : build_filtration_serial(dm, 3, dm.diameter());
    benchmark::DoNotOptimize(fc.size());
  }
}

template <bool Parallel>
void BM_betti_curve(benchmark::State& state) {
  auto dm = shortest_paths(gnp_random(static_cast<std::size_t>(state.range(0)), 0.3, 2));
  auto fc = build_filtration(dm, 2, dm.diameter());
  for (auto _ : state) benchmark::DoNotOptimize(Parallel ? betti_curve(fc) : betti_curve_serial(fc));
}

template <bool Parallel>
void BM_injectivity_radii(benchmark::State& state) {
  Surface s(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Parallel ? injectivity_radii(s.s) : injectivity_radii_serial(s.s));
}

template <bool Parallel>
void BM_width_of_surface(benchmark::State& state) {
  Surface s(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? width_of_surface(s.s).width : width_of_surface_serial(s.s).width);
}

template <bool Parallel>
void BM_class_norm(benchmark::State& state) {
  // a late-born class of a cycle: the boundary space has rank 9 at its birth
  auto dm = shortest_paths(cycle_graph(static_cast<std::size_t>(state.range(0))));
  auto fc = build_filtration(dm, 3, dm.diameter());
  auto pd = compute_pd(fc);
  const auto& pair = pd.pairs(2)[0];
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? class_norm(fc, pair.representative, pair.birth).value
                                      : class_norm_serial(fc, pair.representative, pair.birth).value);
}

}  // namespace

BENCHMARK(BM_shortest_paths<false>)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_shortest_paths<true>)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_build_filtration<false>)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_build_filtration<true>)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_betti_curve<false>)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_betti_curve<true>)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_injectivity_radii<false>)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_injectivity_radii<true>)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_width_of_surface<false>)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_width_of_surface<true>)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_class_norm<false>)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_class_norm<true>)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
