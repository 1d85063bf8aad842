#include "lamekit/funcfield/expansion.hpp"

namespace lamekit::funcfield {

std::string to_string(Uniformizer u) {
  switch (u) {
    case Uniformizer::x_minus_x0:
      return "x_minus_x0";
    case Uniformizer::y_based:
      return "y_based";
    case Uniformizer::x_over_y_at_infinity:
      return "x_over_y_at_infinity";
  }
  return "?";
}

namespace {

// dG/dX of G = Y^2 + a1 XY + a3 Y + X^3 + a2 X^2 + a4 X + a6 in characteristic 2
FieldElement gx_at(const WeierstrassCurve& e, const CurvePoint& q) { return q.x().square() + e.a4() + e.a1() * q.y(); }

// Truncate to `len` coefficients from t^0 and pretend exactness; used inside
// fixed-point iterations whose error terms are tracked by hand.
LaurentSeries cut(const LaurentSeries& s, int len) {
  const FieldContext& k = s.context();
  std::vector<u64> w(static_cast<std::size_t>(len), 0);
  for (int i = 0; i < len; ++i) {
    if (i >= s.valuation_bound() && i < s.precision()) w[static_cast<std::size_t>(i)] = s.coeff(i).bits();
  }
  return {k, 0, std::move(w), LaurentSeries::kExact};
}

Poly h_poly(const WeierstrassCurve& e) { return Poly{e.a3(), e.a1()}; }
Poly f_poly(const WeierstrassCurve& e) { return Poly{e.a6(), e.a4(), e.a2(), e.context().one()}; }

int iterations_for(int m) {
  int it = 2;
  while ((1 << (it - 2)) < m) ++it;
  return it;
}

}  // namespace

Uniformizer default_uniformizer(const WeierstrassCurve& e, const CurvePoint& q) {
  if (q.is_infinity()) return Uniformizer::x_over_y_at_infinity;
  return e.h_at(q.x()).is_zero() ? Uniformizer::y_based : Uniformizer::x_minus_x0;
}

bool uniformizer_valid(const WeierstrassCurve& e, const CurvePoint& q, Uniformizer u) {
  switch (u) {
    case Uniformizer::x_over_y_at_infinity:
      return q.is_infinity();
    case Uniformizer::x_minus_x0:
      return !q.is_infinity() && !e.h_at(q.x()).is_zero();
    case Uniformizer::y_based:
      return !q.is_infinity() && !gx_at(e, q).is_zero();
  }
  return false;
}

std::vector<FieldElement> LocalExpansion::coefficients() const {
  std::vector<FieldElement> out;
  for (int k = series.valuation(); k < series.precision() && k < series.valuation() + 4 * kMaxPrecision; ++k) {
    out.push_back(series.coeff(k));
  }
  return out;
}

std::pair<LaurentSeries, LaurentSeries> coordinate_series(const WeierstrassCurve& e, const CurvePoint& q,
                                                          Uniformizer u, int m) {
  if (!e.contains(q)) throw DomainError("expansion center not on the curve");
  if (!uniformizer_valid(e, q, u)) throw DomainError("uniformizer " + to_string(u) + " is not a local parameter here");
  const FieldContext& k = e.context();
  const LaurentSeries t = LaurentSeries::t(k);
  switch (u) {
    case Uniformizer::x_minus_x0: {
      // Y = (Y^2 + F(X)) / H(X): the error squares each round
      const LaurentSeries x = LaurentSeries::constant(q.x()) + t;
      const LaurentSeries fx = x.compose(f_poly(e)), hinv = x.compose(h_poly(e)).inverse(m);
      LaurentSeries y = LaurentSeries::constant(q.y());
      for (int i = 0; i < iterations_for(m); ++i) y = cut((y * y + fx) * hinv, m);
      return {x, LaurentSeries(k, 0, std::vector<u64>(), m) + y};
    }
    case Uniformizer::y_based: {
      // Newton on G(X) = 0 with G_X = X^2 + a4 + a1 Y a unit at q
      const LaurentSeries y = LaurentSeries::constant(q.y()) + t;
      const LaurentSeries rest = y * y + y * LaurentSeries::constant(e.a3());
      LaurentSeries x = LaurentSeries::constant(q.x());
      for (int i = 0; i < iterations_for(m) + 1; ++i) {
        const LaurentSeries g = x.compose(f_poly(e)) + x * y * LaurentSeries::constant(e.a1()) + rest;
        const LaurentSeries gx = x * x + LaurentSeries::constant(e.a4()) + y * LaurentSeries::constant(e.a1());
        x = cut(x + g * gx.inverse(m + 1), m);
      }
      return {LaurentSeries(k, 0, std::vector<u64>(), m) + x, y};
    }
    case Uniformizer::x_over_y_at_infinity: {
      // w = -1/Y as a series in z = X/Y; each round gains at least one order
      const int len = m + 3;
      const auto c = [&](const FieldElement& a) { return LaurentSeries::constant(a); };
      LaurentSeries w(k);
      for (int i = 0; i < len + 1; ++i) {
        const LaurentSeries ww = w * w;
        w = cut(t * t * t + c(e.a1()) * t * w + c(e.a2()) * t * t * w + c(e.a3()) * ww + c(e.a4()) * t * ww +
                    c(e.a6()) * ww * w,
                len);
      }
      const LaurentSeries w_known = LaurentSeries(k, 0, std::vector<u64>(), len) + w;
      const LaurentSeries y = w_known.inverse(m);
      return {t * y, y};
    }
  }
  throw DomainError("unknown uniformizer");
}

LocalExpansion local_expand(const CurveRationalFunction& f, const CurvePoint& q, int m, Uniformizer u) {
  if (m < 1) throw DomainError("precision must be positive");
  if (!q.is_infinity() && &f.context() != &q.x().context()) throw ContextMismatch("point and function fields differ");
  const auto [x, y] = coordinate_series(f.curve(), q, u, m);
  const LaurentSeries num = x.compose(f.a()) + x.compose(f.b()) * y;
  const LaurentSeries den = x.compose(f.d());
  if (!den.determined()) throw PrecisionExhausted("denominator undetermined at precision " + std::to_string(m));
  LaurentSeries s = num * den.inverse(m);
  if (!s.determined()) {
    throw PrecisionExhausted("valuation undetermined at precision " + std::to_string(m));
  }
  // never report more than m relative digits
  s = s.truncated(s.valuation() + m);
  return {q, u, s};
}

LocalExpansion local_expand(const CurveRationalFunction& f, const CurvePoint& q, int m) {
  return local_expand(f, q, m, default_uniformizer(f.curve(), q));
}

int valuation_at(const CurveRationalFunction& f, const CurvePoint& q, Uniformizer u) {
  if (f.is_zero()) throw DomainError("valuation of the zero function");
  for (int m = kInitialPrecision;; m *= 2) {
    try {
      return local_expand(f, q, m, u).valuation();
    } catch (const PrecisionExhausted&) {
      if (m >= kMaxPrecision) throw;
    }
  }
}

int valuation_at(const CurveRationalFunction& f, const CurvePoint& q) {
  return valuation_at(f, q, default_uniformizer(f.curve(), q));
}

std::optional<FieldElement> value_at(const CurveRationalFunction& f, const CurvePoint& q) {
  if (auto v = f.value_at_affine(q)) return v;
  if (f.is_zero()) return f.context().zero();
  const int v = valuation_at(f, q);
  if (v < 0) return std::nullopt;
  if (v > 0) return f.context().zero();
  return local_expand(f, q, kInitialPrecision).coefficient(0);
}

LocalRamification local_ramification(const CurveRationalFunction& f, const CurvePoint& q) {
  if (f.is_constant()) throw DomainError("ramification of a constant function");
  for (int m = kInitialPrecision;; m *= 2) {
    try {
      const LocalExpansion ex = local_expand(f, q, m);
      LaurentSeries g = ex.series;
      std::optional<FieldElement> value;
      const int v = g.valuation();
      if (v < 0) {
        g = g.inverse(m);
      } else {
        value = v == 0 ? g.coeff(0) : f.context().zero();
        g = g + LaurentSeries::constant(*value);
      }
      const int e = g.valuation();
      // div(df) has degree 0 and at most 2 deg f poles, so a nonzero dg
      // vanishes to order <= 4 deg f here; beyond that df = 0 for certain
      const LaurentSeries dg = g.derivative();
      if (!dg.determined() && dg.precision() > 4 * f.degree()) throw DomainError("inseparable function: df = 0");
      const int d = dg.valuation();
      return {e, d, value};
    } catch (const PrecisionExhausted&) {
      if (m >= kMaxPrecision) throw;
    }
  }
}

int ramification_index(const CurveRationalFunction& f, const CurvePoint& q) { return local_ramification(f, q).index; }

}  // namespace lamekit::funcfield
