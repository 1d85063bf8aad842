#pragma once

#include <cstdint>
#include <vector>

#include "lamekit/ec/curve.hpp"

namespace lamekit::ec {

/// Least d with E[n] inside E(F_{2^d}) for Y^2 + Y = X^3: the order of the
/// Frobenius companion matrix of x^2 + 2 in GL_2(Z/n). n odd, n > 1.
int torsion_field_degree(std::uint64_t n);

struct TorsionBasis {
  std::uint64_t n;
  CurvePoint p1, p2;
};

/// Trial budget for torsion sampling, per unit of n.
inline constexpr int kTorsionTrialsPerN = 64;

/// Two points of exact order n generating E[n]. The curve must be the
/// supersingular model over a field of degree divisible by
/// torsion_field_degree(n). Throws SamplingExhausted after 64 n trials.
TorsionBasis torsion_basis(const WeierstrassCurve& e, std::uint64_t n, std::uint64_t seed);

/// All n^2 combinations a p1 + b p2, index a * n + b.
std::vector<CurvePoint> enumerate_torsion(const WeierstrassCurve& e, const TorsionBasis& basis);

/// Points of exact order n among `points`, in input order.
std::vector<CurvePoint> exact_order_subset(const WeierstrassCurve& e, const std::vector<CurvePoint>& points,
                                           std::uint64_t n);

/// #E(F_{q^k}) for a curve over F_q, from one count over F_q and the trace
/// recurrence. Throws DomainError past 64 bits.
std::uint64_t extension_group_order(const WeierstrassCurve& base, int k);

/// Largest n-primary Sylow subgroup size we are willing to materialize.
inline constexpr std::uint64_t kMaxSylowSize = std::uint64_t{1} << 16;

/// E(F_q)[n], the rational points killed by n, sorted by serialized form.
/// The n-primary Sylow subgroup is generated from random points until its
/// size equals the n-primary part of `group_order`, so the result is exact.
/// Throws DomainError when that part exceeds kMaxSylowSize and
/// SamplingExhausted after 64 fruitless draws.
std::vector<CurvePoint> rational_torsion(const WeierstrassCurve& e, std::uint64_t n, std::uint64_t group_order,
                                         std::uint64_t seed);

/// Smallest multiple D of the curve's field degree, D <= max_degree, such
/// that E(F_{2^D}) contains a point of exact order n; 0 if none. Uses the
/// Frobenius trace recurrence from a single enumeration over the base field.
int ordinary_torsion_field_degree(const WeierstrassCurve& e, std::uint64_t n, int max_degree = 16,
                                  std::uint64_t seed = 0);

}  // namespace lamekit::ec
