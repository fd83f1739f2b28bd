#include <benchmark/benchmark.h>

#include "cbx/monops.hpp"
#include "cbx/monopole.hpp"
#include "cbx/yangian.hpp"

namespace {

void bm_ratfunc_add(benchmark::State& state)
{
    cbx::VarTable vt = cbx::VarTable::make({4}, 0);
    const cbx::VarTable* t = &vt;
    cbx::RatFunc one = cbx::RatFunc::constant(t, 1);
    std::vector<cbx::RatFunc> terms;
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s)
            if (r != s)
                terms.push_back(one / (cbx::RatFunc::var(t, vt.gauge(0, r)) -
                                       cbx::RatFunc::var(t, vt.gauge(0, s))));
    for (auto _ : state) {
        cbx::RatFunc acc(t);
        for (const auto& f : terms) acc += f;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(bm_ratfunc_add);

void bm_macdonald_commutator(benchmark::State& state)
{
    int a = static_cast<int>(state.range(0));
    cbx::QuiverTheory q = cbx::QuiverTheory::jordan(a, 1);
    cbx::VarTable vt = q.make_table();
    cbx::DiffOp e1 = cbx::jordan_op(a, 1, &vt, 1, cbx::SymFunc::one(), cbx::JordanKind::E);
    cbx::DiffOp e2 = cbx::jordan_op(a, 1, &vt, 2, cbx::SymFunc::one(), cbx::JordanKind::E);
    for (auto _ : state) {
        cbx::DiffOp c = cbx::op_commutator(e1, e2);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(bm_macdonald_commutator)->Arg(2)->Arg(3)->Arg(4);

void bm_gklo_serre(benchmark::State& state)
{
    cbx::QuiverTheory q = cbx::QuiverTheory::a_chain({2, 1}, {1, 1});
    cbx::VarTable vt = q.make_table();
    for (auto _ : state) {
        auto rep = cbx::check_relation(q, &vt, cbx::Relation::SerreE, 0, 1);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(bm_gklo_serre);

void bm_hilbert_series(benchmark::State& state)
{
    cbx::QuiverTheory q = cbx::QuiverTheory::jordan(3, 2);
    for (auto _ : state) {
        cbx::Series s = cbx::hilbert_series(q, 16, 10);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(bm_hilbert_series);

} // namespace

BENCHMARK_MAIN();
