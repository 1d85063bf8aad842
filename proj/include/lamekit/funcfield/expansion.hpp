#pragma once

#include <string>

#include "lamekit/funcfield/function.hpp"
#include "lamekit/funcfield/series.hpp"

namespace lamekit::funcfield {

enum class Uniformizer { x_minus_x0, y_based, x_over_y_at_infinity };

std::string to_string(Uniformizer u);

/// Default local parameter at q: X - x_Q when a1 x_Q + a3 != 0, Y - y_Q at
/// the remaining affine points, X/Y at 0_E.
Uniformizer default_uniformizer(const WeierstrassCurve& e, const CurvePoint& q);

/// Whether `u` has valuation exactly 1 at q.
bool uniformizer_valid(const WeierstrassCurve& e, const CurvePoint& q, Uniformizer u);

struct LocalExpansion {
  CurvePoint center;
  Uniformizer uniformizer;
  LaurentSeries series;

  int valuation() const { return series.valuation(); }
  /// Known modulo t^precision().
  int precision() const { return series.precision(); }
  FieldElement coefficient(int k) const { return series.coeff(k); }
  /// Coefficients from t^valuation up to the precision.
  std::vector<FieldElement> coefficients() const;
};

/// Upper limit for the working precision; requests start at 8 and double.
inline constexpr int kInitialPrecision = 8;
inline constexpr int kMaxPrecision = 64;

/// Expansions of X and Y in the local parameter, each with relative precision m.
std::pair<LaurentSeries, LaurentSeries> coordinate_series(const WeierstrassCurve& e, const CurvePoint& q,
                                                          Uniformizer u, int m);

/// Expansion of f at q with the coordinate series known to relative precision m.
/// Throws PrecisionExhausted when the valuation is not determined.
LocalExpansion local_expand(const CurveRationalFunction& f, const CurvePoint& q, int m);
LocalExpansion local_expand(const CurveRationalFunction& f, const CurvePoint& q, int m, Uniformizer u);

/// ord_Q(f), retrying at precisions 8, 16, 32, 64.
int valuation_at(const CurveRationalFunction& f, const CurvePoint& q);
int valuation_at(const CurveRationalFunction& f, const CurvePoint& q, Uniformizer u);

/// f(Q), or nothing at a pole.
std::optional<FieldElement> value_at(const CurveRationalFunction& f, const CurvePoint& q);

struct LocalRamification {
  int index;              // e_Q
  int different;          // d_Q = v_Q(dg/dt), g = f - f(Q) or 1/f
  std::optional<FieldElement> value;  // f(Q); nothing at a pole
  bool tame() const { return index % 2 == 1; }
};

/// Ramification index and different exponent of f at q. f nonconstant;
/// throws DomainError when f is inseparable (a square in k(E)).
LocalRamification local_ramification(const CurveRationalFunction& f, const CurvePoint& q);

int ramification_index(const CurveRationalFunction& f, const CurvePoint& q);

}  // namespace lamekit::funcfield
