#pragma once

#include <optional>

#include "lamekit/ec/curve.hpp"
#include "lamekit/gf2/poly.hpp"

namespace lamekit::funcfield {

using ec::CurvePoint;
using ec::WeierstrassCurve;
using gf2::FieldContext;
using gf2::FieldElement;
using gf2::Poly;
using gf2::u64;

/// (A(X) + B(X) Y) / D(X) in k(E). Y^2 is always reduced through
/// Y^2 = H Y + F, and A, B, D share no common factor; D is monic.
class CurveRationalFunction {
 public:
  CurveRationalFunction(const WeierstrassCurve& e, Poly a, Poly b, Poly d);

  static CurveRationalFunction constant(const WeierstrassCurve& e, const FieldElement& c);
  static CurveRationalFunction x(const WeierstrassCurve& e);
  static CurveRationalFunction y(const WeierstrassCurve& e);
  /// p(X) as a function.
  static CurveRationalFunction from_poly(const WeierstrassCurve& e, const Poly& p);

  const WeierstrassCurve& curve() const { return curve_; }
  const FieldContext& context() const { return curve_.context(); }
  const Poly& a() const { return a_; }
  const Poly& b() const { return b_; }
  const Poly& d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_constant() const;
  /// Regular away from 0_E, i.e. an element of k[E].
  bool is_polynomial() const { return d_.degree() == 0; }

  CurveRationalFunction operator+(const CurveRationalFunction& o) const;
  CurveRationalFunction operator-(const CurveRationalFunction& o) const { return *this + o; }
  CurveRationalFunction operator*(const CurveRationalFunction& o) const;
  CurveRationalFunction operator/(const CurveRationalFunction& o) const { return *this * o.inverse(); }
  CurveRationalFunction operator+(const FieldElement& c) const { return *this + constant(curve_, c); }
  CurveRationalFunction operator*(const FieldElement& c) const;
  CurveRationalFunction inverse() const;
  bool operator==(const CurveRationalFunction& o) const;

  /// Norm of the numerator A + B Y down to k[X]: A^2 + A B H + B^2 F.
  Poly numerator_norm() const;
  /// Order of f at 0_E, exactly, from degrees.
  int valuation_at_infinity() const;
  /// Degree of f as a map to the projective line (0 for constants).
  int degree() const;

  /// Value at an affine point where D does not vanish; nothing otherwise.
  std::optional<FieldElement> value_at_affine(const CurvePoint& p) const;

  /// Same function over a larger field.
  CurveRationalFunction embed(const FieldContext& target) const;

 private:
  void canonicalize();

  WeierstrassCurve curve_;
  Poly a_, b_, d_;
};

/// Function with divisor n(P) - n(0_E), built by double-and-add over chord
/// and vertical lines. Not normalized. Requires n P = 0_E, P != 0_E.
CurveRationalFunction miller_function(const WeierstrassCurve& e, const CurvePoint& p, std::uint64_t n);

/// df/dX, with dY/dX = (X^2 + a4 + a1 Y) / (a1 X + a3).
CurveRationalFunction differentiate(const CurveRationalFunction& f);

nlohmann::json to_json(const CurveRationalFunction& f);

}  // namespace lamekit::funcfield
