#include <benchmark/benchmark.h>

#include <vector>

#include "zariski/factor.hpp"
#include "zariski/kronecker.hpp"
#include "zariski/sampling.hpp"

using namespace zariski;

namespace {

// Products of small irreducibles, so the factorizer has to find several factors.
void BM_FactorInteger(benchmark::State& state) {
    Integer n = 1;
    for (unsigned long p : {1009UL, 10007UL, 100003UL, 1000003UL}) n *= p;
    for (auto _ : state) benchmark::DoNotOptimize(factor_integer(n));
}
BENCHMARK(BM_FactorInteger);

void BM_FactorPolyFp(benchmark::State& state) {
    const auto modulus = static_cast<std::uint64_t>(state.range(0));
    const Poly x = Poly::variable(modulus);
    Poly f = Poly::constant(modulus, 1);
    for (int i = 1; i <= 6; ++i) f *= x.pow(static_cast<unsigned>(i)) + Poly::constant(modulus, i);
    for (auto _ : state) benchmark::DoNotOptimize(factor_poly(f));
}
BENCHMARK(BM_FactorPolyFp)->Arg(2)->Arg(3)->Arg(101);

void BM_FactorPolyQ(benchmark::State& state) {
    const Poly x = Poly::variable(0);
    const Poly f = (x.pow(2) + Poly::constant(0, 1)) * (x.pow(3) - Poly::constant(0, 2)) * (x - Poly::constant(0, 5));
    for (auto _ : state) benchmark::DoNotOptimize(factor_poly(f));
}
BENCHMARK(BM_FactorPolyQ);

template <class D>
void closures(benchmark::State& state, BasePair<D> base) {
    Sampler<D> s(base, kDefaultSeed);
    std::vector<ZarSubset<D>> ys;
    for (int i = 0; i < 64; ++i) ys.push_back(s.subset());
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& y = ys[i++ % ys.size()];
        benchmark::DoNotOptimize(cl_cons(y));
        benchmark::DoNotOptimize(cl_inv(y));
    }
}

void BM_ClosuresQZ(benchmark::State& state) { closures(state, BasePair<Integer>::rationals()); }
void BM_ClosuresF2(benchmark::State& state) { closures(state, BasePair<Poly>::fp_functions(2)); }
BENCHMARK(BM_ClosuresQZ);
BENCHMARK(BM_ClosuresF2);

template <class D>
void kr_membership(benchmark::State& state, BasePair<D> base) {
    Sampler<D> s(base, kDefaultSeed);
    std::vector<std::pair<KrSpec<D>, RatFunT<D>>> cases;
    for (int i = 0; i < 32; ++i) cases.emplace_back(KrSpec<D>(base, s.nonempty_subset()), s.ratfun(3));
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [spec, h] = cases[i++ % cases.size()];
        benchmark::DoNotOptimize(kr_member(spec, h));
    }
}

void BM_KrMemberQZ(benchmark::State& state) { kr_membership(state, BasePair<Integer>::rationals()); }
void BM_KrMemberF3(benchmark::State& state) { kr_membership(state, BasePair<Poly>::fp_functions(3)); }
BENCHMARK(BM_KrMemberQZ);
BENCHMARK(BM_KrMemberF3);

void BM_ApplyWedge(benchmark::State& state) {
    const auto base = BasePair<Integer>::rationals();
    Sampler<Integer> s(base, kDefaultSeed);
    std::vector<std::pair<StarSpec<Integer>, FracIdeal<Integer>>> cases;
    for (int i = 0; i < 32; ++i) cases.emplace_back(StarSpec<Integer>(s.nonempty_subset()), s.ideal());
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [star, ideal] = cases[i++ % cases.size()];
        benchmark::DoNotOptimize(apply_wedge(star, ideal));
    }
}
BENCHMARK(BM_ApplyWedge);

} // namespace

BENCHMARK_MAIN();
