#include "lamekit/hyper/hyper.hpp"
#include "lamekit/util/error.hpp"
#include "lamekit/util/intmath.hpp"

namespace lamekit::hyper {

namespace {

void require_valid(const HyperellipticCurve& c, const MumfordDivisor& d) {
  if (!is_valid(c, d)) throw DomainError("invalid Mumford divisor");
}

}  // namespace

MumfordDivisor MumfordDivisor::identity(const FieldContext& ctx) {
  return {Poly::constant(ctx.one()), Poly(ctx)};
}

bool is_valid(const HyperellipticCurve& c, const MumfordDivisor& d) {
  if (d.u.is_zero() || !d.u.is_monic()) return false;
  if (&d.u.context() != &c.context()) return false;
  if (d.u.degree() > c.genus() || d.v.degree() >= d.u.degree()) return false;
  return ((d.v.square() + d.v + c.f()) % d.u).is_zero();
}

MumfordDivisor divisor_of_point(const HyperellipticCurve& c, const HyperPoint& p) {
  if (p.is_infinity()) return MumfordDivisor::identity(c.context());
  if (!c.contains(p)) throw DomainError("point not on curve");
  const auto& ctx = c.context();
  return {Poly(ctx, {p.x().bits(), 1}), Poly(ctx, {p.y().bits()})};
}

MumfordDivisor cantor_add(const HyperellipticCurve& c, const MumfordDivisor& a, const MumfordDivisor& b) {
  require_valid(c, a);
  require_valid(c, b);
  const Poly f = c.f();
  const Poly one = c.h();

  // composition; characteristic 2 so every sign is +
  const auto g1 = xgcd(a.u, b.u);
  const auto g2 = xgcd(g1.g, a.v + b.v + one);
  const Poly& d = g2.g;
  const Poly s1 = g2.s * g1.s;
  const Poly s2 = g2.s * g1.t;
  const Poly& s3 = g2.t;
  Poly u = (a.u * b.u) / d.square();
  Poly v = ((s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + f)) / d) % u;

  // reduction
  while (u.degree() > c.genus()) {
    const Poly un = (f + v + v.square()) / u;
    v = (v + one) % un;
    u = un;
  }
  u = u.monic();
  v = v % u;
  return {u, v};
}

MumfordDivisor cantor_negate(const HyperellipticCurve& c, const MumfordDivisor& a) {
  require_valid(c, a);
  return {a.u, (a.v + c.h()) % a.u};
}

MumfordDivisor cantor_multiply(const HyperellipticCurve& c, std::uint64_t m, const MumfordDivisor& a) {
  MumfordDivisor acc = MumfordDivisor::identity(c.context());
  MumfordDivisor base = a;
  while (m) {
    if (m & 1) acc = cantor_add(c, acc, base);
    m >>= 1;
    if (m) base = cantor_add(c, base, base);
  }
  return acc;
}

MumfordDivisor class_of_point_pair(const HyperellipticCurve& c, const HyperPoint& p) {
  if (p.is_infinity()) throw DomainError("class_of_point_pair needs an affine point");
  return cantor_add(c, divisor_of_point(c, p), cantor_negate(c, divisor_of_point(c, c.involution(p))));
}

std::uint64_t divisor_class_order(const HyperellipticCurve& c, const MumfordDivisor& d) {
  std::uint64_t n = c.jacobian_order();
  if (!cantor_multiply(c, n, d).is_identity()) throw Error("class order does not divide #J");
  for (const auto& [p, k] : util::factor(n)) {
    for (int i = 0; i < k && cantor_multiply(c, n / p, d).is_identity(); ++i) n /= p;
  }
  return n;
}

PointPairReport point_pair_orders(const HyperellipticCurve& c, int samples, std::uint64_t seed) {
  PointPairReport r;
  r.genus = c.genus();
  r.field_degree = c.context().degree();
  r.jacobian_order = c.jacobian_order();
  std::mt19937_64 rng(seed);
  const auto bound = static_cast<std::uint64_t>(2 * c.genus() + 1);
  for (int i = 0; i < samples; ++i) {
    const auto p = c.random_affine_point(rng);
    const auto n = divisor_class_order(c, class_of_point_pair(c, p));
    r.samples.emplace_back(p, n);
    if (n % 2 == 0) r.all_odd = false;
    if (n % 2 == 0 || n < bound) r.violations.emplace_back(p, n);
  }
  return r;
}

void to_json(nlohmann::json& j, const MumfordDivisor& d) { j = {{"u", d.u}, {"v", d.v}}; }

void to_json(nlohmann::json& j, const PointPairReport& r) {
  auto list = [](const auto& v) {
    auto a = nlohmann::json::array();
    for (const auto& [p, n] : v) a.push_back({{"point", p}, {"order", n}});
    return a;
  };
  j = {{"genus", r.genus},
       {"field_degree", r.field_degree},
       {"jacobian_order", r.jacobian_order},
       {"samples", list(r.samples)},
       {"violations", list(r.violations)},
       {"all_odd", r.all_odd}};
}

}  // namespace lamekit::hyper
