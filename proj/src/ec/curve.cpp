#include "lamekit/ec/curve.hpp"

#include "lamekit/gf2/embed.hpp"
#include "lamekit/gf2/roots.hpp"
#include "lamekit/kernels/kernels.hpp"
#include "lamekit/util/intmath.hpp"

namespace lamekit::ec {

const FieldElement& CurvePoint::x() const {
  if (inf_) throw DomainError("point at infinity has no coordinates");
  return x_;
}

const FieldElement& CurvePoint::y() const {
  if (inf_) throw DomainError("point at infinity has no coordinates");
  return y_;
}

WeierstrassCurve::WeierstrassCurve(FieldElement a1, FieldElement a2, FieldElement a3, FieldElement a4,
                                   FieldElement a6)
    : a1_(a1), a2_(a2), a3_(a3), a4_(a4), a6_(a6) {
  const FieldContext& ctx = a1.context();
  for (const auto* c : {&a2, &a3, &a4, &a6}) {
    if (&c->context() != &ctx) throw ContextMismatch("curve coefficients from different fields");
  }
  if (discriminant().is_zero()) throw DomainError("singular Weierstrass equation");
}

WeierstrassCurve WeierstrassCurve::supersingular(const FieldContext& ctx) {
  return {ctx.zero(), ctx.zero(), ctx.one(), ctx.zero(), ctx.zero()};
}

WeierstrassCurve WeierstrassCurve::ordinary(const FieldElement& t) {
  const FieldContext& ctx = t.context();
  if (t.is_zero()) throw DomainError("ordinary model needs t != 0");
  return {ctx.one(), ctx.zero(), ctx.zero(), t, ctx.zero()};
}

WeierstrassInvariants<FieldElement> WeierstrassCurve::invariants() const {
  const FieldContext& ctx = context();
  return weierstrass_invariants(a1_, a2_, a3_, a4_, a6_, [&](long long n) { return gf2::from_int(ctx, n); });
}

FieldElement WeierstrassCurve::j_invariant() const {
  const auto w = invariants();
  return w.c4 * w.c4 * w.c4 / w.disc;
}

bool WeierstrassCurve::is_supersingular_model() const {
  return a1_.is_zero() && a2_.is_zero() && a3_.is_one() && a4_.is_zero() && a6_.is_zero();
}

bool WeierstrassCurve::contains(const CurvePoint& p) const {
  if (p.is_infinity()) return true;
  if (&p.x().context() != &context() || &p.y().context() != &context()) return false;
  const FieldElement& x = p.x();
  const FieldElement& y = p.y();
  return y * y + h_at(x) * y == f_at(x);
}

void WeierstrassCurve::require_on_curve(const CurvePoint& p) const {
  if (!p.is_infinity() && (&p.x().context() != &context())) {
    throw ContextMismatch("point and curve over different fields");
  }
  if (!contains(p)) throw DomainError("point not on curve");
}

CurvePoint WeierstrassCurve::negate(const CurvePoint& p) const {
  require_on_curve(p);
  if (p.is_infinity()) return p;
  return {p.x(), p.y() + h_at(p.x())};
}

CurvePoint WeierstrassCurve::add(const CurvePoint& p, const CurvePoint& q) const {
  require_on_curve(p);
  require_on_curve(q);
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const FieldElement &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
  FieldElement lambda;
  if (x1 == x2) {
    if ((y1 + y2 + h_at(x1)).is_zero()) return CurvePoint::infinity();
    // tangent slope; denominator H(x1) is nonzero since p is not 2-torsion
    lambda = (x1 * x1 + a4_ + a1_ * y1) / h_at(x1);
  } else {
    lambda = (y1 + y2) / (x1 + x2);
  }
  const FieldElement nu = y1 + lambda * x1;
  const FieldElement x3 = lambda * lambda + a1_ * lambda + a2_ + x1 + x2;
  const FieldElement y3 = (lambda + a1_) * x3 + nu + a3_;
  return {x3, y3};
}

CurvePoint WeierstrassCurve::scalar_mul(std::int64_t k, const CurvePoint& p) const {
  const std::uint64_t m = k < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
  return multiply(m, k < 0 ? negate(p) : p);
}

CurvePoint WeierstrassCurve::multiply(std::uint64_t m, const CurvePoint& p) const {
  require_on_curve(p);
  CurvePoint base = p;
  CurvePoint acc;
  while (m) {
    if (m & 1) acc = add(acc, base);
    base = add(base, base);
    m >>= 1;
  }
  return acc;
}

int WeierstrassCurve::fibre_size(const FieldElement& x) const {
  const FieldElement h = h_at(x);
  if (h.is_zero()) return 1;
  return gf2::trace(f_at(x) / (h * h)) == 0 ? 2 : 0;
}

std::vector<CurvePoint> WeierstrassCurve::lift_x(const FieldElement& x) const {
  const FieldElement h = h_at(x);
  if (h.is_zero()) return {CurvePoint(x, f_at(x).sqrt())};
  std::vector<CurvePoint> out;
  for (const auto& z : gf2::solve_artin_schreier(f_at(x) / (h * h))) out.emplace_back(x, h * z);
  std::sort(out.begin(), out.end(), [](const CurvePoint& a, const CurvePoint& b) { return a.y().bits() < b.y().bits(); });
  return out;
}

WeierstrassCurve WeierstrassCurve::embed(const FieldContext& target) const {
  return {gf2::embed(a1_, target), gf2::embed(a2_, target), gf2::embed(a3_, target), gf2::embed(a4_, target),
          gf2::embed(a6_, target)};
}

CurvePoint WeierstrassCurve::embed(const CurvePoint& p, const FieldContext& target) const {
  if (p.is_infinity()) return p;
  return {gf2::embed(p.x(), target), gf2::embed(p.y(), target)};
}

std::int64_t supersingular_frobenius_trace(int d) {
  std::int64_t t0 = 2, t1 = 0;
  if (d == 0) return t0;
  for (int k = 2; k <= d; ++k) {
    const std::int64_t t2 = -2 * t0;
    t0 = t1;
    t1 = t2;
  }
  return t1;
}

std::uint64_t count_points(const WeierstrassCurve& e, CountMethod method) {
  const int d = e.context().degree();
  if (method == CountMethod::supersingular_formula) {
    if (!e.is_supersingular_model()) throw DomainError("closed-form count needs the model Y^2 + Y = X^3");
    return static_cast<std::uint64_t>(static_cast<__int128>(util::pow2(d)) + 1 - supersingular_frobenius_trace(d));
  }
  if (d > kMaxEnumerationDegree) throw DomainError("enumeration above F_2^24 refused");
  return kernels::curve_point_count_parallel(e);
}

std::uint64_t group_order(const WeierstrassCurve& e) {
  return count_points(e, e.is_supersingular_model() ? CountMethod::supersingular_formula : CountMethod::enumerate);
}

std::uint64_t order_dividing(const WeierstrassCurve& e, const CurvePoint& p, std::uint64_t m) {
  if (!e.multiply(m, p).is_infinity()) throw DomainError("m * P != 0");
  std::uint64_t order = m;
  for (auto [prime, exp] : util::factor(m)) {
    for (int i = 0; i < exp; ++i) {
      if (e.multiply(order / prime, p).is_infinity()) {
        order /= prime;
      } else {
        break;
      }
    }
  }
  return order;
}

std::uint64_t point_order(const WeierstrassCurve& e, const CurvePoint& p) {
  return order_dividing(e, p, group_order(e));
}

bool has_exact_order(const WeierstrassCurve& e, const CurvePoint& p, std::uint64_t n) {
  if (!e.multiply(n, p).is_infinity()) return false;
  for (auto [prime, exp] : util::factor(n)) {
    if (e.multiply(n / prime, p).is_infinity()) return false;
  }
  return n == 1 ? p.is_infinity() : true;
}

CurvePoint random_point(const WeierstrassCurve& e, std::mt19937_64& rng) {
  for (;;) {
    const auto pts = e.lift_x(gf2::random_element(e.context(), rng));
    if (!pts.empty()) return pts[rng() % pts.size()];
  }
}

std::vector<CurvePoint> enumerate_points(const WeierstrassCurve& e) {
  const FieldContext& ctx = e.context();
  if (ctx.degree() > 16) throw DomainError("point enumeration above F_2^16 refused");
  std::vector<CurvePoint> out{CurvePoint::infinity()};
  for (std::uint64_t x = 0; x < ctx.size(); ++x) {
    for (const auto& p : e.lift_x(ctx.element(x))) out.push_back(p);
  }
  return out;
}

nlohmann::json curve_to_json(const WeierstrassCurve& e) {
  return nlohmann::json::array({e.a1(), e.a2(), e.a3(), e.a4(), e.a6()});
}

nlohmann::json point_to_json(const WeierstrassCurve& e, const CurvePoint& p) {
  if (p.is_infinity()) return {{"infinity", true}};
  return {{"curve", curve_to_json(e)}, {"x", p.x()}, {"y", p.y()}};
}

bool serialized_less(const WeierstrassCurve& e, const CurvePoint& a, const CurvePoint& b) {
  return point_to_json(e, a).dump() < point_to_json(e, b).dump();
}

}  // namespace lamekit::ec
