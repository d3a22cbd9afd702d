#include "dgbec/random.hpp"
#include "dgbec/suites.hpp"

#include <benchmark/benchmark.h>

using namespace dgbec;

namespace {

void BM_Rank(benchmark::State& s)
{
    const Field f = s.range(1) ? Field::rationals() : Field::prime(7);
    Rng rng(1);
    const auto n = static_cast<std::size_t>(s.range(0));
    Matrix m = random_matrix(f, n, n, rng);
    for (auto _ : s) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->ArgsProduct({{16, 32, 64}, {0, 1}});

// Direct sum of n nonzero random objects over KE.
DgObject sample(int n)
{
    Rng rng(3);
    RingPtr r = ke_ring(fixture_window(), Field::prime(7));
    DgObject x = zero_object(Instance::CdgMod, r);
    for (int i = 0; i < n;) {
        DgObject y = random_object(Instance::CdgMod, r, rng, 2);
        if (y.dim() == 0) continue;
        x = direct_sum(x, y);
        ++i;
    }
    return x;
}

void BM_HomComplex(benchmark::State& s)
{
    DgObject x = sample(static_cast<int>(s.range(0)));
    for (auto _ : s) benchmark::DoNotOptimize(hom(x, x).degrees.size());
    s.counters["dim"] = static_cast<double>(x.dim());
}
BENCHMARK(BM_HomComplex)->Arg(2)->Arg(4)->Arg(8);

void BM_Phi(benchmark::State& s)
{
    DgObject x = sample(static_cast<int>(s.range(0)));
    for (auto _ : s) benchmark::DoNotOptimize(phi(x).object.base.dim());
    s.counters["dim"] = static_cast<double>(x.dim());
}
BENCHMARK(BM_Phi)->Arg(2)->Arg(4)->Arg(8);

void BM_BecBecInverse(benchmark::State& s)
{
    BecBecObject w = becbec(sample(static_cast<int>(s.range(0))));
    for (auto _ : s) benchmark::DoNotOptimize(becbec_inverse(w).object.dim());
}
BENCHMARK(BM_BecBecInverse)->Arg(2)->Arg(4);

void BM_TotWitness(benchmark::State& s)
{
    Rng rng(4);
    RingPtr r = ke_ring(fixture_window(), Field::prime(7));
    DgObject a = sample(3), b = sample(2);
    ConeData c = cone(a, b, random_closed(a, b, 0, rng));
    ExactComplex e{{b, c.object, shift(a, 1).object}, {c.iota, c.pi}};
    for (auto _ : s) benchmark::DoNotOptimize(tot_exact_witness(e).witness.depth());
}
BENCHMARK(BM_TotWitness);

void BM_ProjResolution(benchmark::State& s)
{
    RingPtr r = ke_ring(fixture_window(), Field::prime(7));
    GradedModule k = simple_module(r->alg, 0);
    for (auto _ : s) benchmark::DoNotOptimize(proj_resolution(k, static_cast<std::size_t>(s.range(0))).exact);
}
BENCHMARK(BM_ProjResolution)->Arg(1)->Arg(3)->Arg(5);

void BM_Criterion(benchmark::State& s)
{
    const int id = static_cast<int>(s.range(0));
    for (auto _ : s) benchmark::DoNotOptimize(run_criterion(id, {}).pass());
    s.SetLabel(criterion_names()[id - 1]);
}
BENCHMARK(BM_Criterion)->DenseRange(1, 10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
