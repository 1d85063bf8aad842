#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "lamekit/ec/torsion.hpp"
#include "lamekit/kernels/kernels.hpp"

using namespace lamekit;
using namespace lamekit::ec;
using gf2::FieldContext;

namespace {

// Counts points by testing every (x, y) pair.
std::uint64_t brute_count(const WeierstrassCurve& e) {
  const auto& k = e.context();
  std::uint64_t n = 1;
  for (std::uint64_t x = 0; x < k.size(); ++x) {
    for (std::uint64_t y = 0; y < k.size(); ++y) {
      if (e.contains(CurvePoint(k.element(x), k.element(y)))) ++n;
    }
  }
  return n;
}

WeierstrassCurve ordinary_over(int d, std::uint64_t t) { return WeierstrassCurve::ordinary(FieldContext::of(d).element(t)); }

}  // namespace

TEST_CASE("point counts on the two families") {
  CHECK(count_points(WeierstrassCurve::supersingular(FieldContext::of(1)), CountMethod::enumerate) == 3);
  CHECK(count_points(WeierstrassCurve::supersingular(FieldContext::of(2)), CountMethod::enumerate) == 9);
  CHECK(count_points(WeierstrassCurve::supersingular(FieldContext::of(3)), CountMethod::enumerate) == 9);
  CHECK(count_points(ordinary_over(1, 1), CountMethod::enumerate) == 4);
  for (int d = 1; d <= 6; ++d) {
    const auto e = WeierstrassCurve::supersingular(FieldContext::of(d));
    CHECK(count_points(e, CountMethod::enumerate) == brute_count(e));
    for (std::uint64_t t = 1; t < FieldContext::of(d).size(); ++t) {
      const auto o = ordinary_over(d, t);
      CHECK(count_points(o, CountMethod::enumerate) == brute_count(o));
    }
  }
}

TEST_CASE("enumeration agrees with the closed form up to degree 16") {
  for (int d = 1; d <= 16; ++d) {
    const auto e = WeierstrassCurve::supersingular(FieldContext::of(d));
    CHECK(count_points(e, CountMethod::enumerate) == count_points(e, CountMethod::supersingular_formula));
  }
  CHECK(count_points(WeierstrassCurve::supersingular(FieldContext::of(8)), CountMethod::supersingular_formula) == 225);
  CHECK(count_points(WeierstrassCurve::supersingular(FieldContext::of(6)), CountMethod::supersingular_formula) == 81);
  CHECK_THROWS_AS(count_points(ordinary_over(4, 3), CountMethod::supersingular_formula), DomainError);
}

TEST_CASE("odd degree: no 2-torsion on the supersingular curve") {
  for (int d : {1, 3, 5, 7}) {
    const auto e = WeierstrassCurve::supersingular(FieldContext::of(d));
    const auto pts = enumerate_points(e);
    CHECK(pts.size() == (std::uint64_t{1} << d) + 1);
    int two_torsion = 0;
    for (const auto& p : pts) two_torsion += (!p.is_infinity() && e.negate(p) == p);
    CHECK(two_torsion == 0);
  }
}

TEST_CASE("ordinary model: the only nontrivial 2-torsion point has x = 0") {
  for (std::uint64_t t = 1; t < 16; ++t) {
    const auto e = ordinary_over(4, t);
    // over a field holding all of E[2]: points with P = -P satisfy H(x) = 0, i.e. x = 0
    std::vector<CurvePoint> found;
    for (const auto& p : enumerate_points(e)) {
      if (!p.is_infinity() && e.negate(p) == p) found.push_back(p);
    }
    REQUIRE(found.size() == 1);
    CHECK(found[0].x().is_zero());
    CHECK(found[0].y().is_zero());
  }
}

TEST_CASE("group law examples") {
  const auto e = WeierstrassCurve::supersingular(FieldContext::of(1));
  const auto& k = e.context();
  const CurvePoint p(k.zero(), k.zero());
  CHECK(e.scalar_mul(3, p).is_infinity());
  CHECK(e.scalar_mul(0, p).is_infinity());
  CHECK(point_order(e, CurvePoint::infinity()) == 1);
  CHECK(point_order(e, p) == 3);
  CHECK(e.scalar_mul(-1, p) == e.negate(p));
  CHECK_THROWS_AS(e.add(p, CurvePoint(k.one(), k.one())), DomainError);
  const auto big = WeierstrassCurve::supersingular(FieldContext::of(8));
  CHECK_THROWS_AS(big.add(p, p), ContextMismatch);
}

TEST_CASE("group axioms on random triples") {
  std::mt19937_64 rng(20240611);
  int cases = 0;
  for (int d : {3, 4, 8, 13, 24, 40, 63}) {
    std::vector<WeierstrassCurve> curves{WeierstrassCurve::supersingular(FieldContext::of(d))};
    curves.push_back(WeierstrassCurve::ordinary(FieldContext::of(d).element((rng() & (FieldContext::of(d).size() - 1)) | 1)));
    for (const auto& e : curves) {
      for (int i = 0; i < 1500; ++i, ++cases) {
        const auto a = random_point(e, rng), b = random_point(e, rng), c = random_point(e, rng);
        REQUIRE(e.contains(a));
        CHECK(e.add(a, b) == e.add(b, a));
        CHECK(e.add(e.add(a, b), c) == e.add(a, e.add(b, c)));
        CHECK(e.add(a, CurvePoint::infinity()) == a);
        CHECK(e.add(a, e.negate(a)).is_infinity());
        CHECK(e.dbl(a) == e.scalar_mul(2, a));
        CHECK(e.scalar_mul(5, a) == e.add(e.scalar_mul(2, a), e.scalar_mul(3, a)));
      }
    }
  }
  CHECK(cases >= 10000);
}

TEST_CASE("Lagrange on sampled points") {
  std::mt19937_64 rng(7);
  for (int d : {5, 8, 12, 16, 24, 36, 63}) {
    const auto e = WeierstrassCurve::supersingular(FieldContext::of(d));
    const auto order = group_order(e);
    for (int i = 0; i < 20; ++i) CHECK(e.multiply(order, random_point(e, rng)).is_infinity());
  }
  for (std::uint64_t t = 1; t < 16; ++t) {
    const auto e = ordinary_over(4, t);
    const auto order = group_order(e);
    for (const auto& p : enumerate_points(e)) CHECK(e.multiply(order, p).is_infinity());
  }
}

TEST_CASE("torsion field degrees") {
  CHECK(torsion_field_degree(3) == 2);
  CHECK(torsion_field_degree(5) == 8);
  CHECK(torsion_field_degree(9) == 6);
  CHECK(torsion_field_degree(7) == 12);
  CHECK(torsion_field_degree(11) == 10);
  CHECK(torsion_field_degree(13) == 24);
  CHECK_THROWS_AS(torsion_field_degree(4), DomainError);
  // n^2 divides the group order exactly from that degree on
  for (std::uint64_t n : {3, 5, 7, 9, 11}) {
    const int d = torsion_field_degree(n);
    CHECK(group_order(WeierstrassCurve::supersingular(FieldContext::of(d))) % (n * n) == 0);
    for (int dd = 1; dd < d; ++dd) {
      if (d % dd != 0) continue;
      CHECK(group_order(WeierstrassCurve::supersingular(FieldContext::of(dd))) % (n * n) != 0);
    }
  }
}

TEST_CASE("torsion bases span E[n]") {
  for (std::uint64_t n : {3, 5, 7, 9, 11, 13}) {
    const auto e = WeierstrassCurve::supersingular(FieldContext::of(torsion_field_degree(n)));
    for (std::uint64_t seed : {0, 1, 2}) {
      const auto basis = torsion_basis(e, n, seed);
      CHECK(point_order(e, basis.p1) == n);
      CHECK(point_order(e, basis.p2) == n);
      const auto pts = enumerate_torsion(e, basis);
      std::set<std::pair<std::uint64_t, std::uint64_t>> distinct;
      for (const auto& p : pts) {
        CHECK(e.scalar_mul(static_cast<std::int64_t>(n), p).is_infinity());
        distinct.insert(p.is_infinity() ? std::pair<std::uint64_t, std::uint64_t>{~0ULL, ~0ULL} : std::pair{p.x().bits(), p.y().bits()});
      }
      CHECK(distinct.size() == n * n);
      // only a = b = 0 gives the identity
      CHECK(pts[0].is_infinity());
      for (std::size_t i = 1; i < pts.size(); ++i) CHECK_FALSE(pts[i].is_infinity());
    }
  }
  const auto e5 = WeierstrassCurve::supersingular(FieldContext::of(8));
  const auto pts = enumerate_torsion(e5, torsion_basis(e5, 5, 0));
  CHECK(pts.size() == 25);
  CHECK(exact_order_subset(e5, pts, 5).size() == 24);
  const auto wrong = WeierstrassCurve::supersingular(FieldContext::of(4));
  CHECK_THROWS_AS(torsion_basis(wrong, 5, 0), DomainError);
}

TEST_CASE("ordinary torsion appears at small degree") {
  for (std::uint64_t t = 1; t < 16; ++t) {
    const auto e = ordinary_over(4, t);
    for (std::uint64_t n : {3, 5, 7}) {
      const int d = ordinary_torsion_field_degree(e, n);
      if (d == 0) continue;
      const auto big = e.embed(FieldContext::of(d));
      CHECK(group_order(big) % n == 0);
    }
  }
}

TEST_CASE("serial and parallel kernels agree") {
  for (int d : {1, 5, 10, 14}) {
    const auto& k = FieldContext::of(d);
    const auto e = WeierstrassCurve::supersingular(k);
    CHECK(kernels::curve_point_count(e, kernels::Exec::serial) == kernels::curve_point_count(e, kernels::Exec::parallel));
    const auto o = WeierstrassCurve::ordinary(k.one());
    CHECK(kernels::curve_point_count(o, kernels::Exec::serial) == kernels::curve_point_count(o, kernels::Exec::parallel));
    for (int g = 1; g <= 3; ++g) {
      CHECK(kernels::hyper_affine_count(g, k, kernels::Exec::serial) ==
            kernels::hyper_affine_count(g, k, kernels::Exec::parallel));
    }
    CHECK(kernels::degree_histogram(k, kernels::Exec::serial) == kernels::degree_histogram(k, kernels::Exec::parallel));
    const auto pts = enumerate_points(e);
    std::vector<CurvePoint> affine(pts.begin() + 1, pts.end());
    CHECK(kernels::rho_values(affine, kernels::Exec::serial) == kernels::rho_values(affine, kernels::Exec::parallel));
  }
}

TEST_CASE("point serialization") {
  const auto e = WeierstrassCurve::supersingular(FieldContext::of(2));
  const auto& k = e.context();
  CHECK(point_to_json(e, CurvePoint::infinity()).dump() == R"({"infinity":true})");
  const CurvePoint p(k.zero(), k.one());
  CHECK(point_to_json(e, p).dump() ==
        R"({"curve":[{"d":2,"hex":"0"},{"d":2,"hex":"0"},{"d":2,"hex":"1"},{"d":2,"hex":"0"},{"d":2,"hex":"0"}],)"
        R"("x":{"d":2,"hex":"0"},"y":{"d":2,"hex":"1"}})");
  CHECK(serialized_less(e, CurvePoint(k.zero(), k.zero()), p));
}

TEST_CASE("rational torsion by Sylow closure matches enumeration") {
  for (std::uint64_t t : {0x1, 0x8, 0xa, 0xc}) {
    const auto base = WeierstrassCurve::ordinary(FieldContext::of(4).element(t));
    for (int k : {1, 2, 3}) {
      const auto e = base.embed(FieldContext::of(4 * k));
      const auto order = ec::extension_group_order(base, k);
      CHECK(order == ec::count_points(e, ec::CountMethod::enumerate));
      const auto all = ec::enumerate_points(e);
      for (std::uint64_t n : {3, 5, 7, 9, 15}) {
        std::vector<CurvePoint> killed;
        for (const auto& p : all) {
          if (e.multiply(n, p).is_infinity()) killed.push_back(p);
        }
        std::sort(killed.begin(), killed.end(),
                  [&](const CurvePoint& a, const CurvePoint& b) { return ec::serialized_less(e, a, b); });
        CHECK(ec::rational_torsion(e, n, order, 5) == killed);
      }
    }
  }
  const auto ss = WeierstrassCurve::supersingular(FieldContext::of(8));
  CHECK(ec::rational_torsion(ss, 3, ec::group_order(ss), 1).size() == 9);
  CHECK(ec::rational_torsion(ss, 5, ec::group_order(ss), 1).size() == 25);
}
