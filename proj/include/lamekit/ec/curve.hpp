#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lamekit/ec/invariants.hpp"
#include "lamekit/gf2/field.hpp"

namespace lamekit::ec {

using gf2::FieldContext;
using gf2::FieldElement;

/// The identity 0_E or an affine point (x, y).
class CurvePoint {
 public:
  CurvePoint() = default;  // infinity
  CurvePoint(FieldElement x, FieldElement y) : inf_(false), x_(x), y_(y) {}
  static CurvePoint infinity() { return {}; }

  bool is_infinity() const { return inf_; }
  const FieldElement& x() const;
  const FieldElement& y() const;

  bool operator==(const CurvePoint& o) const {
    return inf_ == o.inf_ && (inf_ || (x_ == o.x_ && y_ == o.y_));
  }
  bool operator!=(const CurvePoint& o) const { return !(*this == o); }

 private:
  bool inf_ = true;
  FieldElement x_, y_;
};

/// Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6 over a binary field. In
/// characteristic 2 the fibre equation over X = x reads y^2 + H(x) y = F(x)
/// with H = a1 X + a3 and F = X^3 + a2 X^2 + a4 X + a6.
class WeierstrassCurve {
 public:
  WeierstrassCurve(FieldElement a1, FieldElement a2, FieldElement a3, FieldElement a4, FieldElement a6);

  /// Y^2 + Y = X^3
  static WeierstrassCurve supersingular(const FieldContext& ctx);
  /// Y^2 + XY = X^3 + tX, t != 0
  static WeierstrassCurve ordinary(const FieldElement& t);

  const FieldContext& context() const { return a1_.context(); }
  const FieldElement& a1() const { return a1_; }
  const FieldElement& a2() const { return a2_; }
  const FieldElement& a3() const { return a3_; }
  const FieldElement& a4() const { return a4_; }
  const FieldElement& a6() const { return a6_; }

  WeierstrassInvariants<FieldElement> invariants() const;
  FieldElement discriminant() const { return invariants().disc; }
  FieldElement j_invariant() const;

  /// True for the model (0,0,1,0,0).
  bool is_supersingular_model() const;

  FieldElement h_at(const FieldElement& x) const { return a1_ * x + a3_; }
  FieldElement f_at(const FieldElement& x) const { return ((x + a2_) * x + a4_) * x + a6_; }

  bool contains(const CurvePoint& p) const;
  CurvePoint negate(const CurvePoint& p) const;
  CurvePoint add(const CurvePoint& p, const CurvePoint& q) const;
  CurvePoint dbl(const CurvePoint& p) const { return add(p, p); }
  CurvePoint scalar_mul(std::int64_t k, const CurvePoint& p) const;
  /// m * p for the full unsigned range (group orders near 2^63).
  CurvePoint multiply(std::uint64_t m, const CurvePoint& p) const;

  /// All points with the given x-coordinate, sorted by y bits.
  std::vector<CurvePoint> lift_x(const FieldElement& x) const;
  /// Number of points with the given x-coordinate (0, 1 or 2) without solving.
  int fibre_size(const FieldElement& x) const;

  /// Same coefficients viewed over a larger field.
  WeierstrassCurve embed(const FieldContext& target) const;
  CurvePoint embed(const CurvePoint& p, const FieldContext& target) const;

  bool operator==(const WeierstrassCurve& o) const {
    return a1_ == o.a1_ && a2_ == o.a2_ && a3_ == o.a3_ && a4_ == o.a4_ && a6_ == o.a6_;
  }

 private:
  void require_on_curve(const CurvePoint& p) const;

  FieldElement a1_, a2_, a3_, a4_, a6_;
};

enum class CountMethod { enumerate, supersingular_formula };

/// Upper bound on the context degree for exhaustive point counting.
inline constexpr int kMaxEnumerationDegree = 24;

/// #E(F_{2^d}) including infinity.
std::uint64_t count_points(const WeierstrassCurve& e, CountMethod method);

/// Trace of Frobenius t_d for Y^2 + Y = X^3 over F_{2^d}: t0 = 2, t1 = 0, t_k = -2 t_{k-2}.
std::int64_t supersingular_frobenius_trace(int d);

/// Group order by the fastest applicable method.
std::uint64_t group_order(const WeierstrassCurve& e);

/// Exact order of p.
std::uint64_t point_order(const WeierstrassCurve& e, const CurvePoint& p);

/// Exact order of p given that m * p = 0_E.
std::uint64_t order_dividing(const WeierstrassCurve& e, const CurvePoint& p, std::uint64_t m);

bool has_exact_order(const WeierstrassCurve& e, const CurvePoint& p, std::uint64_t n);

CurvePoint random_point(const WeierstrassCurve& e, std::mt19937_64& rng);

/// Every point of E(F_{2^d}) sorted by (x, y) bits; d <= 16.
std::vector<CurvePoint> enumerate_points(const WeierstrassCurve& e);

nlohmann::json point_to_json(const WeierstrassCurve& e, const CurvePoint& p);
nlohmann::json curve_to_json(const WeierstrassCurve& e);
/// Order on points by their compact JSON serialization.
bool serialized_less(const WeierstrassCurve& e, const CurvePoint& a, const CurvePoint& b);

}  // namespace lamekit::ec
