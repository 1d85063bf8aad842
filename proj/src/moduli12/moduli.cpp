#include "lamekit/moduli12/moduli.hpp"

#include <random>

namespace lamekit::moduli12 {

namespace {

struct Change {
  FieldElement r, s, t;  // x = x' + r, y = y' + s x' + t
};

Change tate_change(const ec::WeierstrassCurve& e, const ec::CurvePoint& p) {
  if (p.is_infinity()) throw DomainError("tate_normal_form needs P != 0_E");
  const FieldElement r = p.x(), t = p.y();
  // after translating: a3' = a3 + r a1 (characteristic 2), a4' = a4 + r^2 + t a1
  const FieldElement a3 = e.a3() + r * e.a1();
  if (a3.is_zero()) throw DomainError("tate_normal_form needs P of order > 2");
  const FieldElement a4 = e.a4() + r * r + t * e.a1();
  return {r, a4 / a3, t};
}

}  // namespace

WeightedPoint<FieldElement> tate_normal_form(const ec::WeierstrassCurve& e, const ec::CurvePoint& p) {
  if (!e.contains(p)) throw DomainError("point not on the curve");
  const Change ch = tate_change(e, p);
  // coordinate change with u = 1, signs dropped in characteristic 2
  const FieldElement &r = ch.r, &s = ch.s;
  const FieldElement a1 = e.a1();
  const FieldElement a2 = e.a2() + s * e.a1() + r + s * s;  // 3r = r
  const FieldElement a3 = e.a3() + r * e.a1();
  return {a1, a2, a3};
}

ec::WeierstrassCurve tate_curve(const WeightedPoint<FieldElement>& w) {
  const auto& k = w.a.context();
  return {w.a, w.b, w.c, k.zero(), k.zero()};
}

bool tate_round_trip(const ec::WeierstrassCurve& e, const ec::CurvePoint& p, int samples, std::uint64_t seed) {
  const Change ch = tate_change(e, p);
  const auto w = tate_normal_form(e, p);
  const auto et = tate_curve(w);
  auto map = [&](const ec::CurvePoint& q) -> ec::CurvePoint {
    if (q.is_infinity()) return q;
    const FieldElement x = q.x() + ch.r;
    return {x, q.y() + ch.s * x + ch.t};
  };
  const auto& k = e.context();
  if (!(map(p) == ec::CurvePoint(k.zero(), k.zero()))) return false;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    const auto q = ec::random_point(e, rng);
    const auto q2 = ec::random_point(e, rng);
    if (!et.contains(map(q))) return false;
    if (!(map(e.add(q, q2)) == et.add(map(q), map(q2)))) return false;
  }
  // isomorphic curves share the group order
  return ec::order_dividing(et, map(p), ec::group_order(e)) == ec::point_order(e, p);
}

std::string rational_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

nlohmann::json to_json(const WeightedPoint<FieldElement>& w) {
  const auto c = canonical(w);
  return {{"field", {{"char", 2}, {"d", w.a.context().degree()}}}, {"abc", {c.a, c.b, c.c}}};
}

nlohmann::json to_json(const WeightedPoint<Rational>& w) {
  const auto c = canonical(w);
  return {{"field", "Q"}, {"abc", {rational_string(c.a), rational_string(c.b), rational_string(c.c)}}};
}

}  // namespace lamekit::moduli12
