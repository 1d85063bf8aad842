#pragma once

#include <cstdint>
#include <vector>

#include "lamekit/ec/curve.hpp"

// Data-parallel scans over whole fields or point sets. Every kernel comes as
// a serial reference and an OpenMP version; the two must agree exactly.
namespace lamekit::kernels {

enum class Exec { serial, parallel };

/// #E(F_{2^d}) by summing fibre sizes over every x.
std::uint64_t curve_point_count_serial(const ec::WeierstrassCurve& e);
std::uint64_t curve_point_count_parallel(const ec::WeierstrassCurve& e);

/// Affine points of Y^2 + Y = X^(2g+1) over ctx.
std::uint64_t hyper_affine_count_serial(int genus, const gf2::FieldContext& ctx);
std::uint64_t hyper_affine_count_parallel(int genus, const gf2::FieldContext& ctx);

/// hist[e] = #{a in F_{2^d} : element_degree(a) = e}, for e = 0..d.
std::vector<std::uint64_t> degree_histogram_serial(const gf2::FieldContext& ctx);
std::vector<std::uint64_t> degree_histogram_parallel(const gf2::FieldContext& ctx);

/// (x^4 + x)^3 for every point; points must be affine.
std::vector<gf2::FieldElement> rho_values_serial(const std::vector<ec::CurvePoint>& points);
std::vector<gf2::FieldElement> rho_values_parallel(const std::vector<ec::CurvePoint>& points);

inline std::uint64_t curve_point_count(const ec::WeierstrassCurve& e, Exec exec) {
  return exec == Exec::serial ? curve_point_count_serial(e) : curve_point_count_parallel(e);
}
inline std::uint64_t hyper_affine_count(int genus, const gf2::FieldContext& ctx, Exec exec) {
  return exec == Exec::serial ? hyper_affine_count_serial(genus, ctx) : hyper_affine_count_parallel(genus, ctx);
}
inline std::vector<std::uint64_t> degree_histogram(const gf2::FieldContext& ctx, Exec exec) {
  return exec == Exec::serial ? degree_histogram_serial(ctx) : degree_histogram_parallel(ctx);
}
inline std::vector<gf2::FieldElement> rho_values(const std::vector<ec::CurvePoint>& pts, Exec exec) {
  return exec == Exec::serial ? rho_values_serial(pts) : rho_values_parallel(pts);
}

}  // namespace lamekit::kernels
