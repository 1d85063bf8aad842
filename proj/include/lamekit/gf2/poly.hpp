#pragma once

#include <utility>
#include <vector>

#include "lamekit/gf2/field.hpp"

namespace lamekit::gf2 {

/// Dense univariate polynomial over one F_{2^d}; coefficients stored as packed
/// words, lowest degree first, with no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const FieldContext& ctx) : ctx_(&ctx) {}
  Poly(const FieldContext& ctx, std::vector<u64> coeffs);
  Poly(std::initializer_list<FieldElement> coeffs);

  static Poly constant(const FieldElement& c);
  static Poly x(const FieldContext& ctx);
  /// c * x^k
  static Poly monomial(const FieldElement& c, int k);

  const FieldContext& context() const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  FieldElement coeff(int i) const;
  FieldElement lead() const { return coeff(degree()); }
  const std::vector<u64>& words() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const { return *this + o; }
  Poly operator*(const Poly& o) const;
  Poly operator*(const FieldElement& s) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return ctx_ == o.ctx_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  FieldElement operator()(const FieldElement& x) const;
  Poly derivative() const;
  Poly monic() const;
  Poly square() const;
  /// Coefficient-wise square root of a polynomial in x^2 (requires derivative 0).
  Poly sqrt_of_square() const;
  /// x -> x^(2^k) applied to each coefficient.
  Poly frobenius_coeffs(int k) const;

  Poly powmod(std::uint64_t e, const Poly& m) const;

 private:
  void trim();
  const FieldContext& ctx_for(const Poly& o) const;

  const FieldContext* ctx_ = nullptr;
  std::vector<u64> c_;
};

/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
struct XGcd {
  Poly g, s, t;
};
XGcd xgcd(const Poly& a, const Poly& b);

void to_json(nlohmann::json& j, const Poly& p);

}  // namespace lamekit::gf2
