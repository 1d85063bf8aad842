#pragma once

#include <cstdint>
#include <vector>

#include "lamekit/kernels/kernels.hpp"
#include "lamekit/lame/automorphism.hpp"

namespace lamekit::lame {

/// (x^4 + x)^3, the quotient by the automorphism group. P != 0_E.
FieldElement rho(const CurvePoint& p);

struct LameClass {
  std::uint64_t order;        // exact order of the representative
  FieldElement rho_value;     // in the working field
  int moduli_degree;          // element_degree(rho_value)
  CurvePoint representative;  // least serialized point of the orbit
  std::size_t orbit_size;
};

/// Classes of points of exact order n (odd, 1 < n <= 13) on Y^2 + Y = X^3 over
/// the field holding E[n]. Each rho fibre is certified to be a single orbit;
/// a failed certification throws.
std::vector<LameClass> classify_torsion(std::uint64_t n, std::uint64_t seed = 0,
                                        kernels::Exec exec = kernels::Exec::parallel);

/// Groups points (exact order n, already filtered) by rho and certifies every
/// group against aut_orbit.
std::vector<LameClass> classify_points(const WeierstrassCurve& e, const std::vector<CurvePoint>& points,
                                       std::uint64_t n, kernels::Exec exec = kernels::Exec::parallel);

/// {"n", "rho", "moduli_degree", "rep"}; rho is written in its smallest field.
nlohmann::json to_json(const WeierstrassCurve& e, const LameClass& c);

}  // namespace lamekit::lame
