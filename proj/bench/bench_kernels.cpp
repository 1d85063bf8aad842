#include <benchmark/benchmark.h>

#include "lamekit/ec/curve.hpp"
#include "lamekit/kernels/kernels.hpp"

// Serial reference against the OpenMP path for each kernel. The field degree
// is the benchmark argument.
namespace {

using lamekit::gf2::FieldContext;
using lamekit::kernels::Exec;

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(1) ? "parallel" : "serial"); }

void BM_CurvePointCount(benchmark::State& state) {
  const auto& ctx = FieldContext::of(static_cast<int>(state.range(0)));
  const auto e = lamekit::ec::WeierstrassCurve::ordinary(ctx.element(0xa));
  for (auto _ : state) benchmark::DoNotOptimize(lamekit::kernels::curve_point_count(e, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ctx.size()));
  label(state);
}

void BM_HyperAffineCount(benchmark::State& state) {
  const auto& ctx = FieldContext::of(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lamekit::kernels::hyper_affine_count(3, ctx, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ctx.size()));
  label(state);
}

void BM_DegreeHistogram(benchmark::State& state) {
  const auto& ctx = FieldContext::of(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lamekit::kernels::degree_histogram(ctx, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ctx.size()));
  label(state);
}

void BM_RhoValues(benchmark::State& state) {
  const auto& ctx = FieldContext::of(static_cast<int>(state.range(0)));
  const auto e = lamekit::ec::WeierstrassCurve::supersingular(ctx);
  auto pts = lamekit::ec::enumerate_points(e);
  std::erase_if(pts, [](const lamekit::ec::CurvePoint& p) { return p.is_infinity(); });
  for (auto _ : state) benchmark::DoNotOptimize(lamekit::kernels::rho_values(pts, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.size()));
  label(state);
}

}  // namespace

BENCHMARK(BM_CurvePointCount)->ArgsProduct({{12, 16}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HyperAffineCount)->ArgsProduct({{12, 16}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DegreeHistogram)->ArgsProduct({{12, 16}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RhoValues)->ArgsProduct({{12, 16}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
