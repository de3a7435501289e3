#include <benchmark/benchmark.h>

#include <random>

#include "k3fib/contract.hpp"
#include "k3fib/datasets.hpp"
#include "k3fib/fibers.hpp"
#include "k3fib/lattice.hpp"
#include "k3fib/niemeier.hpp"
#include "k3fib/nishiyama.hpp"
#include "k3fib/normal_form.hpp"
#include "k3fib/weierstrass.hpp"

using namespace k3fib;

namespace {

IntMatrix random_symmetric(std::mt19937& rng, int n, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) a(i, j) = a(j, i) = d(rng);
    return a;
}

void BM_SmithNormalForm(benchmark::State& state) {
    std::mt19937 rng(5);
    IntMatrix a = random_symmetric(rng, static_cast<int>(state.range(0)), 20);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(18)->Arg(24);

void BM_DiscriminantFormNs(benchmark::State& state) {
    NsLattice ns = ns_lattice(load_dataset("x9"));
    for (auto _ : state) benchmark::DoNotOptimize(discriminant_form(ns.lattice));
}
BENCHMARK(BM_DiscriminantFormNs);

void BM_VerifyNiemeier(benchmark::State& state) {
    const NiemeierSpec& spec = catalog().at(static_cast<std::size_t>(state.range(0)));
    state.SetLabel(spec.name);
    for (auto _ : state) benchmark::DoNotOptimize(verify(spec));
}
BENCHMARK(BM_VerifyNiemeier)->Arg(0)->Arg(11)->Arg(23)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
    const char family = static_cast<char>(state.range(0));
    RootType t0 = make_root_type(family, 8);
    state.SetLabel(t0.str());
    for (auto _ : state) benchmark::DoNotOptimize(classify(t0));
}
BENCHMARK(BM_Classify)->Arg('A')->Arg('D')->Arg('E')->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_FindFibers(benchmark::State& state) {
    CurveConfig x9 = load_dataset("x9");
    KodairaType k = parse_kodaira(state.range(0) == 0 ? "I16" : "I8*");
    state.SetLabel(k.str());
    for (auto _ : state) benchmark::DoNotOptimize(find_fibers(x9, k));
}
BENCHMARK(BM_FindFibers)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MakeRecords(benchmark::State& state) {
    CurveConfig x9 = load_dataset("x9");
    for (auto _ : state)
        for (const auto& r : x9.records) benchmark::DoNotOptimize(make_record(x9, r));
}
BENCHMARK(BM_MakeRecords)->Unit(benchmark::kMillisecond);

void BM_Contract(benchmark::State& state) {
    CurveConfig c = load_dataset(state.range(0) == 0 ? "r9" : "r4");
    state.SetLabel(state.range(0) == 0 ? "r9" : "r4");
    for (auto _ : state) benchmark::DoNotOptimize(contract_to_minimal(c, ""));
}
BENCHMARK(BM_Contract)->Arg(0)->Arg(1);

void BM_GroupLaw(benchmark::State& state) {
    WeierstrassExample ex = weierstrass_example("weierstrass-ex1");
    FFCurve e = ex.curve();
    FFPoint q = ex.point(ex.points[1]);
    for (auto _ : state) benchmark::DoNotOptimize(e.scalar_mul(static_cast<long>(state.range(0)), q));
}
BENCHMARK(BM_GroupLaw)->Arg(3)->Arg(16);

void BM_TorsionOrder(benchmark::State& state) {
    WeierstrassExample ex = weierstrass_example("weierstrass-r9-split");
    FFCurve e = ex.curve();
    FFPoint p = ex.point(ex.points[0]);
    for (auto _ : state) benchmark::DoNotOptimize(e.torsion_order(p));
}
BENCHMARK(BM_TorsionOrder);

}  // namespace

BENCHMARK_MAIN();
