#include <doctest.h>

#include <random>

#include "lamekit/ec/torsion.hpp"
#include "lamekit/funcfield/ramification.hpp"
#include "lamekit/gf2/roots.hpp"

using namespace lamekit;
using namespace lamekit::funcfield;
using ec::WeierstrassCurve;
using gf2::FieldContext;

namespace {

using F = CurveRationalFunction;

Poly random_poly(const FieldContext& k, int deg, std::mt19937_64& rng) {
  std::vector<u64> w;
  for (int i = 0; i <= deg; ++i) w.push_back(rng() & (k.size() - 1));
  return Poly(k, w);
}

F random_function(const WeierstrassCurve& e, std::mt19937_64& rng, int deg = 3) {
  const auto& k = e.context();
  Poly d = random_poly(k, static_cast<int>(rng() % 3), rng);
  if (d.is_zero()) d = Poly::constant(k.one());
  return F(e, random_poly(k, deg, rng), random_poly(k, deg - 1, rng), d);
}

// Direct evaluation where the representation allows it.
std::optional<FieldElement> eval_direct(const F& f, const CurvePoint& q) { return f.value_at_affine(q); }

}  // namespace

TEST_CASE("arithmetic in k(E)") {
  const auto e = WeierstrassCurve::supersingular(FieldContext::of(4));
  const auto& k = e.context();
  const auto X = F::x(e), Y = F::y(e);
  // Y^2 = Y + X^3 on Y^2 + Y = X^3
  CHECK(Y * Y == Y + X * X * X);
  CHECK(X * F::constant(e, k.one()) == X);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const F f = random_function(e, rng), g = random_function(e, rng);
    if (g.is_zero()) continue;
    CHECK((f / g) * g == f);
    CHECK(f * g == g * f);
    CHECK((f + g) + g == f);
  }
  CHECK_THROWS_AS(F(e, Poly(k), Poly(k), Poly(k)).inverse(), DivisionByZero);
  const auto o = WeierstrassCurve::ordinary(k.element(3));
  CHECK_THROWS_AS(X + F::x(o), DomainError);
}

TEST_CASE("evaluation agrees with arithmetic") {
  const auto e = WeierstrassCurve::ordinary(FieldContext::of(5).element(7));
  std::mt19937_64 rng(12);
  const auto pts = ec::enumerate_points(e);
  for (int i = 0; i < 100; ++i) {
    const F f = random_function(e, rng), g = random_function(e, rng);
    for (std::size_t j = 1; j < pts.size(); j += 3) {
      const auto a = eval_direct(f, pts[j]), b = eval_direct(g, pts[j]), ab = eval_direct(f * g, pts[j]);
      if (a && b && ab) CHECK(*ab == *a * *b);
      if (a && b) {
        const auto s = value_at(f + g, pts[j]);
        REQUIRE(s);
        CHECK(*s == *a + *b);
      }
    }
  }
}

TEST_CASE("degree of a function") {
  const auto e = WeierstrassCurve::supersingular(FieldContext::of(2));
  const auto& k = e.context();
  const auto X = F::x(e), Y = F::y(e);
  CHECK(X.degree() == 2);
  CHECK(Y.degree() == 3);
  CHECK(X.inverse().degree() == 2);
  CHECK((Y / X).degree() == 2);
  CHECK(F::constant(e, k.one()).degree() == 0);
  CHECK((X * X + Y).degree() == 4);
}

TEST_CASE("Miller functions") {
  const auto e = WeierstrassCurve::supersingular(FieldContext::of(2));
  const auto& k = e.context();
  const CurvePoint p(k.zero(), k.zero());
  const F f = miller_function(e, p, 3);
  CHECK((f / F::y(e)).is_constant());
  CHECK(f.degree() == 3);
  CHECK_THROWS_AS(miller_function(e, p, 4), DomainError);
  CHECK_THROWS_AS(miller_function(e, CurvePoint::infinity(), 3), DomainError);

  for (std::uint64_t n : {3, 5, 7, 9, 11}) {
    const auto big = WeierstrassCurve::supersingular(FieldContext::of(ec::torsion_field_degree(n)));
    const auto basis = ec::torsion_basis(big, n, 1);
    const F fp = miller_function(big, basis.p1, n);
    CHECK(fp.is_polynomial());
    CHECK(fp.degree() == static_cast<int>(n));
    CHECK(fp.valuation_at_infinity() == -static_cast<int>(n));
    CHECK(valuation_at(fp, basis.p1) == static_cast<int>(n));
    CHECK(valuation_at(fp, CurvePoint::infinity()) == -static_cast<int>(n));
    CHECK(ramification_index(fp, basis.p1) == static_cast<int>(n));
    CHECK(ramification_index(fp, CurvePoint::infinity()) == static_cast<int>(n));
    // divisor n(P) - n(0_E): no other zeros or poles
    const auto zeros = fiber(fp, big.context().zero());
    REQUIRE(zeros.points.size() == 1);
    CHECK(zeros.points[0].point == basis.p1);
    CHECK(zeros.points[0].multiplicity == static_cast<int>(n));
    CHECK(zeros.complete());
    const auto poles = fiber(fp, std::nullopt);
    REQUIRE(poles.points.size() == 1);
    CHECK(poles.points[0].point.is_infinity());
    CHECK(poles.resolved_multiplicity() == static_cast<int>(n));
  }
}

TEST_CASE("derivatives") {
  const auto e = WeierstrassCurve::supersingular(FieldContext::of(3));
  const auto& k = e.context();
  const auto X = F::x(e), Y = F::y(e);
  CHECK(differentiate(X) == F::constant(e, k.one()));
  CHECK(differentiate(Y) == X * X);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const F f = random_function(e, rng), g = random_function(e, rng);
    CHECK(differentiate(f * f).is_zero());
    // Leibniz
    CHECK(differentiate(f * g) == differentiate(f) * g + f * differentiate(g));
  }
}

TEST_CASE("local expansions") {
  const auto e = WeierstrassCurve::supersingular(FieldContext::of(2));
  const auto& k = e.context();
  const CurvePoint origin(k.zero(), k.zero());
  const auto X = F::x(e), Y = F::y(e);

  const auto ex = local_expand(X, origin, 3);
  CHECK(ex.uniformizer == Uniformizer::x_minus_x0);
  CHECK(ex.coefficient(0).is_zero());
  CHECK(ex.coefficient(1).is_one());
  CHECK(ex.coefficient(2).is_zero());

  const auto ey = local_expand(Y, origin, 4);
  CHECK(ey.valuation() == 3);
  CHECK(ey.coefficient(3).is_one());

  const auto ez = local_expand(X / Y, CurvePoint::infinity(), 3);
  CHECK(ez.uniformizer == Uniformizer::x_over_y_at_infinity);
  CHECK(ez.valuation() == 1);
  CHECK(local_expand(X, CurvePoint::infinity(), 8).valuation() == -2);
  CHECK(local_expand(Y, CurvePoint::infinity(), 8).valuation() == -3);

  // constant functions expand exactly, so any precision determines them
  CHECK(local_expand(F::constant(e, k.one()), origin, 1).valuation() == 0);
  // undetermined valuations are reported, never guessed
  CHECK_THROWS_AS(local_expand(Y, origin, 2), PrecisionExhausted);
}

TEST_CASE("expansions satisfy the curve equation") {
  std::mt19937_64 rng(99);
  for (const auto& e : {WeierstrassCurve::supersingular(FieldContext::of(6)),
                        WeierstrassCurve::ordinary(FieldContext::of(6).element(9))}) {
    const auto& k = e.context();
    std::vector<CurvePoint> centers{CurvePoint::infinity()};
    for (int i = 0; i < 10; ++i) centers.push_back(ec::random_point(e, rng));
    if (e.a1().is_one()) centers.push_back(e.lift_x(k.zero())[0]);
    for (const auto& q : centers) {
      const auto [x, y] = coordinate_series(e, q, default_uniformizer(e, q), 24);
      const auto c = [](const FieldElement& a) { return LaurentSeries::constant(a); };
      const auto lhs = y * y + c(e.a1()) * x * y + c(e.a3()) * y;
      const auto rhs = x * x * x + c(e.a2()) * x * x + c(e.a4()) * x + c(e.a6());
      const auto diff = lhs + rhs;
      CHECK_FALSE(diff.determined());
      CHECK(diff.precision() >= 18);
    }
  }
}

TEST_CASE("valuation does not depend on the uniformizer") {
  std::mt19937_64 rng(3);
  const auto e = WeierstrassCurve::ordinary(FieldContext::of(5).element(3));
  int compared = 0;
  for (const auto& q : ec::enumerate_points(e)) {
    if (q.is_infinity()) continue;
    if (!uniformizer_valid(e, q, Uniformizer::x_minus_x0) || !uniformizer_valid(e, q, Uniformizer::y_based)) continue;
    for (int i = 0; i < 5; ++i) {
      const F f = random_function(e, rng);
      if (f.is_zero()) continue;
      CHECK(valuation_at(f, q, Uniformizer::x_minus_x0) == valuation_at(f, q, Uniformizer::y_based));
      ++compared;
    }
  }
  CHECK(compared > 50);
  const CurvePoint r(e.context().zero(), e.context().zero());
  CHECK_FALSE(uniformizer_valid(e, r, Uniformizer::x_minus_x0));
  CHECK_THROWS_AS(local_expand(F::x(e), r, 8, Uniformizer::x_minus_x0), DomainError);
}

TEST_CASE("expansion is multiplicative") {
  std::mt19937_64 rng(17);
  const auto e = WeierstrassCurve::supersingular(FieldContext::of(8));
  for (int i = 0; i < 300; ++i) {
    const F f = random_function(e, rng), g = random_function(e, rng);
    if (f.is_zero() || g.is_zero()) continue;
    const CurvePoint q = (i % 5 == 0) ? CurvePoint::infinity() : ec::random_point(e, rng);
    const auto a = local_expand(f, q, 32), b = local_expand(g, q, 32), ab = local_expand(f * g, q, 32);
    const auto prod = a.series * b.series;
    const int top = std::min(prod.precision(), ab.precision());
    CHECK(ab.valuation() == a.valuation() + b.valuation());
    for (int j = ab.valuation(); j < top; ++j) CHECK(ab.coefficient(j) == prod.coeff(j));
  }
}

TEST_CASE("fibres of Y") {
  const auto e = WeierstrassCurve::supersingular(FieldContext::of(2));
  const auto& k = e.context();
  const auto Y = F::y(e);
  const auto z = fiber(Y, k.zero());
  REQUIRE(z.points.size() == 1);
  CHECK(z.points[0].point == CurvePoint(k.zero(), k.zero()));
  CHECK(z.points[0].multiplicity == 3);
  const auto one = fiber(Y, k.one());
  REQUIRE(one.points.size() == 1);
  CHECK(one.points[0].point == CurvePoint(k.zero(), k.one()));
  CHECK(one.points[0].multiplicity == 3);
}

TEST_CASE("squares have no different") {
  const auto e = WeierstrassCurve::supersingular(FieldContext::of(2));
  const auto& k = e.context();
  const auto X = F::x(e), Y = F::y(e);
  const CurvePoint o(k.zero(), k.zero());
  CHECK_THROWS_AS(local_ramification(X * X, o), DomainError);
  CHECK_THROWS_AS(local_ramification(Y * Y + X * X, CurvePoint::infinity()), DomainError);
  CHECK_THROWS_AS(fiber(X * X * X * X, k.zero()), DomainError);
  // X^2 + Y is separable, X is a local parameter at o
  CHECK(local_ramification(X * X + Y, o).index == 2);
}

TEST_CASE("rational fibre points match brute-force evaluation") {
  std::mt19937_64 rng(8);
  for (std::uint64_t n : {3, 5, 9}) {
    const auto e = WeierstrassCurve::supersingular(FieldContext::of(ec::torsion_field_degree(n)));
    const auto basis = ec::torsion_basis(e, n, 0);
    const F f = miller_function(e, basis.p1, n);
    const auto pts = ec::enumerate_points(e);
    int complete = 0;
    for (int i = 0; i < 12; ++i) {
      const auto v = *value_at(f, pts[1 + rng() % (pts.size() - 1)]);
      std::vector<CurvePoint> brute;
      for (std::size_t j = 1; j < pts.size(); ++j) {
        if (*value_at(f, pts[j]) == v) brute.push_back(pts[j]);
      }
      const auto fib = fiber(f, v);
      std::vector<CurvePoint> got;
      for (const auto& p : fib.points) got.push_back(p.point);
      std::sort(brute.begin(), brute.end(), [&](auto& a, auto& b) { return ec::serialized_less(e, a, b); });
      CHECK(got == brute);
      if (fib.complete()) {
        ++complete;
        CHECK(fib.resolved_multiplicity() == static_cast<int>(n));
      }
    }
    (void)complete;
  }
}

TEST_CASE("logarithmic differential of f_P") {
  for (std::uint64_t n : {3, 5, 7, 9}) {
    const auto e = WeierstrassCurve::supersingular(FieldContext::of(ec::torsion_field_degree(n)));
    const auto basis = ec::torsion_basis(e, n, 2);
    const F f = miller_function(e, basis.p1, n);
    const F h = differentiate(f) / f;
    const CurvePoint q = e.multiply((n + 1) / 2, basis.p1);
    CHECK(e.dbl(q) == basis.p1);
    CHECK(valuation_at(h, q) == 2);
    CHECK(valuation_at(h, basis.p1) == -1);
    CHECK(valuation_at(h, CurvePoint::infinity()) == -1);
    std::mt19937_64 rng(n);
    for (int i = 0; i < 20; ++i) {
      const auto r = ec::random_point(e, rng);
      if (r == q || r == basis.p1 || r.is_infinity()) continue;
      CHECK(valuation_at(h, r) == 0);
    }
  }
}

TEST_CASE("ramification profile, supersingular") {
  for (std::uint64_t n : {3, 5, 7, 9}) {
    const auto e = WeierstrassCurve::supersingular(FieldContext::of(ec::torsion_field_degree(n)));
    const auto basis = ec::torsion_basis(e, n, 0);
    const F f = miller_function(e, basis.p1, n);
    const CurvePoint q = e.multiply((n + 1) / 2, basis.p1);
    const auto fq = *value_at(f, q);
    const auto prof = ramification_profile(f, {std::nullopt, e.context().zero(), fq});
    CHECK(prof.degree == static_cast<int>(n));
    CHECK(prof.certified());
    CHECK(prof.different_total == static_cast<int>(2 * n));
    CHECK(prof.unclaimed.empty());
    const auto loc = local_ramification(f, q);
    CHECK(loc.index == 3);
    CHECK(loc.different == 2);
    CHECK(loc.tame());
    if (n == 3) {
      CHECK(local_ramification(f, basis.p1).different == 2);
      CHECK(local_ramification(f, CurvePoint::infinity()).different == 2);
    }
  }
}

TEST_CASE("an incomplete claim triggers the search") {
  const auto e = WeierstrassCurve::supersingular(FieldContext::of(8));
  const auto basis = ec::torsion_basis(e, 5, 0);
  const F f = miller_function(e, basis.p1, 5);
  const auto prof = ramification_profile(f, {std::nullopt, e.context().zero()});
  REQUIRE(prof.unclaimed.size() == 1);
  CHECK(prof.unclaimed[0].point == e.multiply(3, basis.p1));
  CHECK(prof.unclaimed[0].multiplicity == 3);
  CHECK(prof.certified());
}

TEST_CASE("function serialization") {
  const auto e = WeierstrassCurve::supersingular(FieldContext::of(4));
  CHECK(to_json(F::y(e)).dump() == R"({"A":[],"B":["1"],"D":["1"],"d":4})");
}
