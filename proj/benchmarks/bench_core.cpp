// Microbenchmarks for the hot kernels: ghost fill, operator application,
// velocity diagnosis, transport, and one implicit step.
#include <benchmark/benchmark.h>

#include <random>

#include "pghd/advection.hpp"
#include "pghd/boundary.hpp"
#include "pghd/diffusion.hpp"
#include "pghd/stepper.hpp"
#include "pghd/velocity.hpp"

using namespace pghd;

namespace {

ScalarField3 random_field(const Grid& g, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ud(-1.0, 1.0);
    ScalarField3 f(g);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) f(i, j, k) = ud(rng);
    return f;
}

Grid bench_grid() { return Grid(32, 32, 16, 1.0, 1.0, 1.0); }

}  // namespace

static void BM_FillGhosts(benchmark::State& state) {
    PhysParams p;
    Grid g = bench_grid();
    ScalarField3 f = random_field(g, 1);
    for (auto _ : state) {
        fill_ghosts(f, p, g);
        benchmark::DoNotOptimize(f.raw().data());
    }
}
BENCHMARK(BM_FillGhosts);

static void BM_ApplyAMatfree(benchmark::State& state) {
    PhysParams p;
    Grid g = bench_grid();
    ScalarField3 f = random_field(g, 2);
    fill_ghosts(f, p, g);
    for (auto _ : state) {
        ScalarField3 r = apply_A_matfree(f, p, g);
        benchmark::DoNotOptimize(r.raw().data());
    }
}
BENCHMARK(BM_ApplyAMatfree);

static void BM_ApplyAssembled(benchmark::State& state) {
    PhysParams p;
    Grid g = bench_grid();
    DiffusionOperator op = assemble(g, p);
    ScalarField3 f = random_field(g, 3);
    for (auto _ : state) {
        ScalarField3 r = op.apply(f);
        benchmark::DoNotOptimize(r.raw().data());
    }
}
BENCHMARK(BM_ApplyAssembled);

static void BM_DiagnoseVelocity(benchmark::State& state) {
    PhysParams p;
    Grid g = bench_grid();
    ScalarField3 f = random_field(g, 4);
    fill_ghosts(f, p, g);
    ScalarField2 ts(g);
    fill_ghosts_2d(ts, p, g);
    for (auto _ : state) {
        VelocityField vel = diagnose_velocity(f, ts, p, g);
        benchmark::DoNotOptimize(vel.w.data());
    }
}
BENCHMARK(BM_DiagnoseVelocity);

static void BM_AdvectTendency(benchmark::State& state) {
    PhysParams p;
    Grid g = bench_grid();
    ScalarField3 f = random_field(g, 5);
    fill_ghosts(f, p, g);
    ScalarField2 ts(g);
    fill_ghosts_2d(ts, p, g);
    const VelocityField vel = diagnose_velocity(f, ts, p, g);
    for (auto _ : state) {
        ScalarField3 r = advect_tendency(f, vel, g);
        benchmark::DoNotOptimize(r.raw().data());
    }
}
BENCHMARK(BM_AdvectTendency);

static void BM_Step(benchmark::State& state) {
    PhysParams p;
    Grid g = bench_grid();
    DiffusionOperator op = assemble(g, p);
    StepConfig sc;
    sc.dt = 1e-3;
    Stepper stepper(op, sc);
    ScalarField2 ts(g);
    fill_ghosts_2d(ts, p, g);
    const ScalarField3 q(g);
    SimState st;
    st.Ttilde = random_field(g, 6);
    for (auto _ : state) {
        stepper.step(st, ts, q);
        benchmark::DoNotOptimize(st.Ttilde.raw().data());
    }
}
BENCHMARK(BM_Step);

static void BM_Assemble(benchmark::State& state) {
    PhysParams p;
    Grid g(16, 16, 8, 1.0, 1.0, 1.0);
    for (auto _ : state) {
        DiffusionOperator op = assemble(g, p);
        benchmark::DoNotOptimize(op.A.valuePtr());
    }
}
BENCHMARK(BM_Assemble);

BENCHMARK_MAIN();
