#pragma once

#include <array>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "lamekit/ec/curve.hpp"

// Weighted projective coordinates [a, b, c] of weights 1, 2, 3 for pairs
// (E, P) through the Tate form Y^2 + aXY + cY = X^3 + bX^2, P = (0, 0).
namespace lamekit::moduli12 {

using Rational = boost::multiprecision::cpp_rational;
using gf2::FieldElement;

/// Field glue so the formulas below run over both coefficient types.
template <class T>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  struct Ctx {};
  static Ctx context(const Rational&) { return {}; }
  static Rational lift(Ctx, long long n) { return Rational(n); }
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational inverse(const Rational& x) { return 1 / x; }
};

template <>
struct FieldOps<FieldElement> {
  using Ctx = const gf2::FieldContext*;
  static Ctx context(const FieldElement& x) { return &x.context(); }
  static FieldElement lift(Ctx k, long long n) { return gf2::from_int(*k, n); }
  static bool is_zero(const FieldElement& x) { return x.is_zero(); }
  static FieldElement inverse(const FieldElement& x) { return x.inverse(); }
};

template <class T>
struct WeightedPoint {
  T a, b, c;
};

/// Representative of the weighted class over the algebraic closure:
/// a != 0: [1, b/a^2, c/a^3]; a = 0, b c != 0: [0, s, s] with s = b^3/c^2;
/// otherwise [0, 1, 0] or [0, 0, 1]. Throws on [0, 0, 0].
template <class T>
WeightedPoint<T> canonical(const WeightedPoint<T>& p) {
  using F = FieldOps<T>;
  const auto k = F::context(p.a);
  const T zero = F::lift(k, 0), one = F::lift(k, 1);
  if (!F::is_zero(p.a)) {
    const T ia = F::inverse(p.a);
    return {one, p.b * ia * ia, p.c * ia * ia * ia};
  }
  const bool bz = F::is_zero(p.b), cz = F::is_zero(p.c);
  if (bz && cz) throw DomainError("[0, 0, 0] is not a weighted point");
  if (cz) return {zero, one, zero};
  if (bz) return {zero, zero, one};
  const T ic = F::inverse(p.c);
  const T s = p.b * p.b * p.b * ic * ic;
  return {zero, s, s};
}

template <class T>
bool wp_equal(const WeightedPoint<T>& p, const WeightedPoint<T>& q) {
  const auto cp = canonical(p), cq = canonical(q);
  return cp.a == cq.a && cp.b == cq.b && cp.c == cq.c;
}

/// [lambda a, lambda^2 b, lambda^3 c]
template <class T>
WeightedPoint<T> scale(const WeightedPoint<T>& p, const T& lambda) {
  return {lambda * p.a, lambda * lambda * p.b, lambda * lambda * lambda * p.c};
}

/// -c^2 (b a^4 + 8 a^2 b^2 + 16 b^3 - a^3 c + 27 c^2 - 36 a b c)
template <class T>
T discriminant_formula(const WeightedPoint<T>& p) {
  const auto k = FieldOps<T>::context(p.a);
  auto n = [&](long long v) { return FieldOps<T>::lift(k, v); };
  const T &a = p.a, &b = p.b, &c = p.c;
  const T a2 = a * a, a3 = a2 * a, a4 = a2 * a2;
  const T inner = b * a4 + n(8) * a2 * b * b + n(16) * b * b * b - a3 * c + n(27) * c * c - n(36) * a * b * c;
  return -(c * c * inner);
}

/// -(16 b^2 + 8 b a^2 + a^4 - 24 a c)^3 / (c^2 (...)); nothing when the
/// denominator vanishes.
template <class T>
std::optional<T> j_formula(const WeightedPoint<T>& p) {
  const auto k = FieldOps<T>::context(p.a);
  auto n = [&](long long v) { return FieldOps<T>::lift(k, v); };
  const T &a = p.a, &b = p.b, &c = p.c;
  const T num = n(16) * b * b + n(8) * b * a * a + a * a * a * a - n(24) * a * c;
  const T den = discriminant_formula(p);
  if (FieldOps<T>::is_zero(den)) return std::nullopt;
  return num * num * num * FieldOps<T>::inverse(den);
}

/// Standard discriminant of E_{a,b,c} = (a, b, c, 0, 0) from the b-invariants.
template <class T>
T standard_discriminant(const WeightedPoint<T>& p) {
  const auto k = FieldOps<T>::context(p.a);
  auto lift = [&](long long v) { return FieldOps<T>::lift(k, v); };
  return ec::weierstrass_invariants(p.a, p.b, p.c, lift(0), lift(0), lift).disc;
}

/// Standard j = c4^3 / Delta of E_{a,b,c}.
template <class T>
std::optional<T> standard_j(const WeightedPoint<T>& p) {
  const auto k = FieldOps<T>::context(p.a);
  auto lift = [&](long long v) { return FieldOps<T>::lift(k, v); };
  const auto w = ec::weierstrass_invariants(p.a, p.b, p.c, lift(0), lift(0), lift);
  if (FieldOps<T>::is_zero(w.disc)) return std::nullopt;
  return w.c4 * w.c4 * w.c4 * FieldOps<T>::inverse(w.disc);
}

/// The forgetful map to the j-line.
template <class T>
std::optional<T> forgetful(const WeightedPoint<T>& p) {
  return j_formula(p);
}

/// Coordinates of (E, P) after moving P to (0, 0) and clearing a4 (a6
/// vanishes with the translation). Requires P of order > 2.
WeightedPoint<FieldElement> tate_normal_form(const ec::WeierstrassCurve& e, const ec::CurvePoint& p);

/// The Tate curve of a weighted point.
ec::WeierstrassCurve tate_curve(const WeightedPoint<FieldElement>& w);

/// Checks that (x, y) -> (x - x_P, y - y_P - s (x - x_P)) carries `samples`
/// random points of E onto the Tate curve and P to (0, 0), and that (0, 0)
/// keeps the order of P.
bool tate_round_trip(const ec::WeierstrassCurve& e, const ec::CurvePoint& p, int samples, std::uint64_t seed);

/// "p/q" in lowest terms (just "p" for integers).
std::string rational_string(const Rational& r);

nlohmann::json to_json(const WeightedPoint<FieldElement>& w);
nlohmann::json to_json(const WeightedPoint<Rational>& w);

}  // namespace lamekit::moduli12
