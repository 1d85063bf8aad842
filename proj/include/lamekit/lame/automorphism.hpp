#pragma once

#include <vector>

#include "lamekit/ec/curve.hpp"

namespace lamekit::lame {

using ec::CurvePoint;
using ec::WeierstrassCurve;
using gf2::FieldContext;
using gf2::FieldElement;
using gf2::u64;

/// (x, y) -> (u^2 x + a, y + u^2 a^2 x + c) on Y^2 + Y = X^3, with u^3 = 1,
/// a in F_4 and c^2 + c = a^3.
struct AutomorphismElement {
  FieldElement u, a, c;

  CurvePoint apply(const CurvePoint& p) const;
  /// this o other: apply `other` first.
  AutomorphismElement operator*(const AutomorphismElement& other) const;
  bool operator==(const AutomorphismElement& o) const { return u == o.u && a == o.a && c == o.c; }
  bool is_identity() const { return u.is_one() && a.is_zero() && c.is_zero(); }
};

/// The 24 automorphisms over ctx (which must contain F_4), identity first,
/// then sorted by (u, a, c) bits. The parametrization is verified on first use
/// per field: curve preservation, 24 distinct maps, closure, the composition
/// rule against sequential application, additivity and non-commutativity.
const std::vector<AutomorphismElement>& aut_group(const FieldContext& ctx);

/// Orbit of p under aut_group, deduplicated and sorted by serialized point.
std::vector<CurvePoint> aut_orbit(const WeierstrassCurve& e, const CurvePoint& p);

nlohmann::json to_json(const AutomorphismElement& g);

}  // namespace lamekit::lame
