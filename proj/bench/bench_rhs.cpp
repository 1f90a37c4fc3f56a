// Serial reference assembly against the OpenMP kernel on the bubble grid.
#include "atmofv/cases.hpp"
#include "atmofv/operator.hpp"

#include <benchmark/benchmark.h>

#include <omp.h>

namespace {

using namespace atmofv;

struct Setup {
  CaseConfig cfg;
  Mesh mesh;
  GasConstants k;
  Field<ConservedState> q;
  OperatorConfig op;

  explicit Setup(double h)
      : cfg([h] {
          CaseConfig c = preset(CaseId::Bubble);
          c.dx = h;
          c.dz = h;
          return c;
        }()),
        mesh(grid_spec(cfg)),
        k(dry_air()),
        q(initial_state(cfg, mesh, k)),
        op{cfg.solver, cfg.diffusion} {}
};

void BM_Reference(benchmark::State& state) {
  Setup s(static_cast<double>(state.range(0)));
  for (auto _ : state) {
    RhsField rhs = assemble_rhs_reference(s.q, s.op, s.mesh, s.k);
    benchmark::DoNotOptimize(rhs.values().data());
  }
  state.SetItemsProcessed(state.iterations() * s.mesh.nx() * s.mesh.nz());
}

void BM_Kernel(benchmark::State& state) {
  Setup s(static_cast<double>(state.range(0)));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  SpatialOperator kernel(s.mesh, s.k, s.op);
  RhsField rhs(s.mesh);
  for (auto _ : state) {
    kernel.evaluate(s.q, rhs);
    benchmark::DoNotOptimize(rhs.values().data());
  }
  state.SetItemsProcessed(state.iterations() * s.mesh.nx() * s.mesh.nz());
}

}  // namespace

BENCHMARK(BM_Reference)->Arg(10)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Kernel)
    ->ArgsProduct({{10, 5}, {1, 2, 4}})
    ->ArgNames({"h", "threads"})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
