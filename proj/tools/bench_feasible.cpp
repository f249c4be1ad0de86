#include <benchmark/benchmark.h>

#include <random>

#include "oag/goldens.hpp"
#include "oag/lex_linear.hpp"

using namespace oag;

namespace {

const Scene& scene()
{
    static Scene s = golden_nonforking_vs_seq();
    return s;
}

Problem make_problem(int natoms, unsigned seed)
{
    const Ambient& amb = scene().amb;
    std::mt19937 gen(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    int nv = 3;
    Problem p;
    p.nvars = nv;
    for (int a = 0; a < natoms; ++a) {
        LinearForm f = LinearForm::of(amb.zero());
        for (size_t i = 0; i < f.constant.v.size(); ++i)
            f.constant.v[i] = coef(gen);
        for (int v = 0; v < nv; ++v) {
            GroupElement g = amb.zero();
            for (size_t i = 0; i < g.v.size(); ++i)
                g.v[i] = coef(gen);
            f.add_term(v, g, amb);
        }
        p.choices.push_back(lex_choice(amb, f, a % 2 ? Rel::lt : Rel::le, nv));
    }
    return p;
}

void BM_serial(benchmark::State& st)
{
    Problem p = make_problem(int(st.range(0)), 7);
    const FieldSpec& F = scene().amb.field();
    for (auto _ : st)
        benchmark::DoNotOptimize(solve(F, p).sat);
}

void BM_parallel(benchmark::State& st)
{
    Problem p = make_problem(int(st.range(0)), 7);
    const FieldSpec& F = scene().amb.field();
    for (auto _ : st)
        benchmark::DoNotOptimize(solve_parallel(F, p).sat);
}

}

BENCHMARK(BM_serial)->Arg(2)->Arg(4)->Arg(6);
BENCHMARK(BM_parallel)->Arg(2)->Arg(4)->Arg(6);
BENCHMARK_MAIN();
