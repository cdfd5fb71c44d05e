#include <benchmark/benchmark.h>

#include "mubkit/construct.hpp"
#include "mubkit/primitive.hpp"
#include "mubkit/verify.hpp"

using namespace mubkit;

namespace {

FieldCtx field_for(std::int64_t n) {
  switch (n) {
    case 27: return FieldCtx(search_primitive_poly(Prime(3), 3));
    case 49: return FieldCtx(search_primitive_poly(Prime(7), 2));
    case 121: return FieldCtx(search_primitive_poly(Prime(11), 2));
    default: return FieldCtx(search_primitive_poly(Prime(5), 3));
  }
}

void BM_Build(benchmark::State& state, Route route, Exec exec) {
  const auto f = field_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_route(f, route, exec));
  state.SetItemsProcessed(state.iterations() * std::int64_t{f.size()} * f.size() * f.size());
}

void BM_Verify(benchmark::State& state, VerifyMode mode, Exec exec) {
  const auto set = build_mub_set(field_for(state.range(0)), Route::q);
  for (auto _ : state) benchmark::DoNotOptimize(verify_mub(set, mode, kDefaultTolerance, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Build, q_serial, Route::q, Exec::serial)->Arg(27)->Arg(49)->Arg(121)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Build, q_parallel, Route::q, Exec::parallel)->Arg(27)->Arg(49)->Arg(121)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Build, trace_serial, Route::trace, Exec::serial)->Arg(27)->Arg(49)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Build, trace_parallel, Route::trace, Exec::parallel)->Arg(27)->Arg(49)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Verify, numeric_serial, VerifyMode::numeric, Exec::serial)->Arg(27)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Verify, numeric_parallel, VerifyMode::numeric, Exec::parallel)->Arg(27)->Arg(49)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Verify, exact_serial, VerifyMode::exact, Exec::serial)->Arg(27)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Verify, exact_parallel, VerifyMode::exact, Exec::parallel)->Arg(27)->Arg(49)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
