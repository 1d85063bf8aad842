#pragma once

#include <vector>

#include "lamekit/gf2/field.hpp"
#include "lamekit/gf2/poly.hpp"

namespace lamekit::funcfield {

using gf2::FieldContext;
using gf2::FieldElement;
using gf2::u64;

/// Truncated Laurent series sum_{k >= start} c_k t^k known modulo t^prec.
/// Exact series (polynomials in t, t^-1) carry prec == kExact. A series whose
/// known coefficients are all zero but which is not exact is undetermined:
/// its valuation is only bounded below by prec.
class LaurentSeries {
 public:
  static constexpr int kExact = 1 << 28;

  explicit LaurentSeries(const FieldContext& ctx);  // exact zero
  LaurentSeries(const FieldContext& ctx, int start, std::vector<u64> coeffs, int prec);

  static LaurentSeries constant(const FieldElement& c);
  /// The uniformizer t, exactly.
  static LaurentSeries t(const FieldContext& ctx);
  /// p(t) exactly.
  static LaurentSeries from_poly(const gf2::Poly& p);

  const FieldContext& context() const { return *ctx_; }
  bool is_exact() const { return prec_ >= kExact; }
  bool is_exact_zero() const { return c_.empty() && is_exact(); }
  /// Some coefficient below the precision is nonzero.
  bool determined() const { return !c_.empty(); }
  /// Throws PrecisionExhausted when undetermined and DomainError for exact zero.
  int valuation() const;
  /// Lower bound on the valuation that is always available.
  int valuation_bound() const { return c_.empty() ? prec_ : start_; }
  int precision() const { return prec_; }
  int relative_precision() const { return prec_ - valuation(); }
  /// Coefficient of t^k; throws PrecisionExhausted for k >= precision.
  FieldElement coeff(int k) const;

  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-(const LaurentSeries& o) const { return *this + o; }
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries operator*(const FieldElement& s) const;
  /// Exact inverses of non-monomials are cut to relative precision max_rel.
  LaurentSeries inverse(int max_rel) const;
  LaurentSeries derivative() const;
  LaurentSeries truncated(int prec) const;
  /// Evaluates p at this series by Horner's rule.
  LaurentSeries compose(const gf2::Poly& p) const;

  /// Same coefficients and precision; used for equality checks in tests.
  bool same_as(const LaurentSeries& o) const;

 private:
  void normalize();

  const FieldContext* ctx_;
  int start_ = 0;
  std::vector<u64> c_;
  int prec_ = kExact;
};

}  // namespace lamekit::funcfield
