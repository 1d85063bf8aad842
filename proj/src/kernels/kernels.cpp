#include "lamekit/kernels/kernels.hpp"

#include <omp.h>

#include "lamekit/util/error.hpp"

namespace lamekit::kernels {

namespace {

using gf2::FieldContext;

std::uint64_t field_size(const FieldContext& ctx) {
  if (ctx.degree() > ec::kMaxEnumerationDegree) throw DomainError("field too large to scan");
  return std::uint64_t{1} << ctx.degree();
}

// Fibre size from raw bits, shared by both paths.
int fibre(const ec::WeierstrassCurve& e, std::uint64_t xb) {
  return e.fibre_size(e.context().element(xb));
}

std::uint64_t odd_power_trace_zero(int genus, const FieldContext& ctx, std::uint64_t x) {
  return ctx.trace(ctx.pow(x, static_cast<std::uint64_t>(2 * genus + 1))) == 0 ? 2 : 0;
}

}  // namespace

std::uint64_t curve_point_count_serial(const ec::WeierstrassCurve& e) {
  const std::uint64_t q = field_size(e.context());
  std::uint64_t total = 1;
  for (std::uint64_t x = 0; x < q; ++x) total += static_cast<std::uint64_t>(fibre(e, x));
  return total;
}

std::uint64_t curve_point_count_parallel(const ec::WeierstrassCurve& e) {
  const auto q = static_cast<std::int64_t>(field_size(e.context()));
  std::uint64_t total = 1;
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::int64_t x = 0; x < q; ++x) total += static_cast<std::uint64_t>(fibre(e, static_cast<std::uint64_t>(x)));
  return total;
}

std::uint64_t hyper_affine_count_serial(int genus, const FieldContext& ctx) {
  const std::uint64_t q = field_size(ctx);
  std::uint64_t total = 0;
  for (std::uint64_t x = 0; x < q; ++x) total += odd_power_trace_zero(genus, ctx, x);
  return total;
}

std::uint64_t hyper_affine_count_parallel(int genus, const FieldContext& ctx) {
  const auto q = static_cast<std::int64_t>(field_size(ctx));
  std::uint64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::int64_t x = 0; x < q; ++x) total += odd_power_trace_zero(genus, ctx, static_cast<std::uint64_t>(x));
  return total;
}

std::vector<std::uint64_t> degree_histogram_serial(const FieldContext& ctx) {
  const std::uint64_t q = field_size(ctx);
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(ctx.degree()) + 1, 0);
  for (std::uint64_t a = 0; a < q; ++a) ++hist[static_cast<std::size_t>(gf2::element_degree(ctx.element(a)))];
  return hist;
}

std::vector<std::uint64_t> degree_histogram_parallel(const FieldContext& ctx) {
  const auto q = static_cast<std::int64_t>(field_size(ctx));
  const std::size_t bins = static_cast<std::size_t>(ctx.degree()) + 1;
  std::vector<std::uint64_t> hist(bins, 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(bins, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t a = 0; a < q; ++a) {
      ++local[static_cast<std::size_t>(gf2::element_degree(ctx.element(static_cast<std::uint64_t>(a))))];
    }
#pragma omp critical
    for (std::size_t i = 0; i < bins; ++i) hist[i] += local[i];
  }
  return hist;
}

namespace {
gf2::FieldElement rho_of(const ec::CurvePoint& p) {
  const auto& x = p.x();
  const auto x4 = x.square().square();
  return (x4 + x).pow(3);
}
}  // namespace

std::vector<gf2::FieldElement> rho_values_serial(const std::vector<ec::CurvePoint>& points) {
  std::vector<gf2::FieldElement> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(rho_of(p));
  return out;
}

std::vector<gf2::FieldElement> rho_values_parallel(const std::vector<ec::CurvePoint>& points) {
  std::vector<gf2::FieldElement> out(points.size());
  const auto n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = rho_of(points[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace lamekit::kernels
