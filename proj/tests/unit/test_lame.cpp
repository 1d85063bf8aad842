#include <doctest.h>

#include <random>
#include <set>

#include "lamekit/ec/torsion.hpp"
#include "lamekit/gf2/embed.hpp"
#include "lamekit/lame/census.hpp"
#include "lamekit/lame/counting.hpp"
#include "lamekit/lame/cover.hpp"
#include "lamekit/util/intmath.hpp"

using namespace lamekit;
using namespace lamekit::lame;
using gf2::FieldContext;

namespace {

WeierstrassCurve ss(int d) { return WeierstrassCurve::supersingular(FieldContext::of(d)); }

// Exact-degree count by scanning every element.
std::uint64_t scan_degree_count(int d) {
  const auto& k = FieldContext::of(d);
  std::uint64_t n = 0;
  for (u64 a = 0; a < k.size(); ++a) n += gf2::element_degree(k.element(a)) == d;
  return n;
}

}  // namespace

TEST_CASE("automorphism group") {
  const auto& k = FieldContext::of(8);
  const auto& g = aut_group(k);
  REQUIRE(g.size() == 24);
  CHECK(g.front().is_identity());
  // negation is (1, 0, 1)
  const AutomorphismElement neg{k.one(), k.zero(), k.one()};
  CHECK(std::find(g.begin(), g.end(), neg) != g.end());
  const auto e = ss(8);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    const auto p = ec::random_point(e, rng);
    CHECK(neg.apply(p) == e.negate(p));
  }
  int table = 0;
  bool noncommuting = false;
  for (const auto& a : g) {
    for (const auto& b : g) {
      CHECK(std::find(g.begin(), g.end(), a * b) != g.end());
      noncommuting = noncommuting || !(a * b == b * a);
      ++table;
    }
  }
  CHECK(table == 576);
  CHECK(noncommuting);
  // element orders are those of SL(2, 3)
  std::multiset<int> orders;
  for (const auto& a : g) {
    int o = 1;
    for (auto p = a; !p.is_identity(); p = p * a) ++o;
    orders.insert(o);
  }
  CHECK(orders.count(1) == 1);
  CHECK(orders.count(2) == 1);
  CHECK(orders.count(3) == 8);
  CHECK(orders.count(4) == 6);
  CHECK(orders.count(6) == 8);
  CHECK_THROWS_AS(aut_group(FieldContext::of(3)), DomainError);
}

TEST_CASE("rho") {
  const auto e = ss(2);
  const auto& k = e.context();
  CHECK(rho(CurvePoint(k.zero(), k.zero())).is_zero());
  CHECK(rho(CurvePoint(k.zero(), k.one())).is_zero());
  CHECK_THROWS_AS(rho(CurvePoint::infinity()), DomainError);
  const auto big = ss(12);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto p = ec::random_point(big, rng);
    if (p.is_infinity()) continue;
    for (const auto& a : aut_group(big.context())) CHECK(rho(a.apply(p)) == rho(p));
  }
}

TEST_CASE("orbits") {
  const auto e = ss(2);
  const auto& k = e.context();
  const auto orbit = aut_orbit(e, CurvePoint(k.zero(), k.zero()));
  CHECK(orbit.size() == 8);
  for (const auto& p : orbit) CHECK(point_order(e, p) == 3);
  const auto e5 = ss(8);
  const auto basis = ec::torsion_basis(e5, 5, 0);
  CHECK(aut_orbit(e5, basis.p1).size() == 24);
  // orbits partition E[5]
  const auto all = ec::enumerate_torsion(e5, basis);
  for (const auto& p : all) {
    if (p.is_infinity()) continue;
    for (const auto& q : all) {
      if (q.is_infinity()) continue;
      const auto op = aut_orbit(e5, p), oq = aut_orbit(e5, q);
      const bool same = op == oq;
      bool meet = false;
      for (const auto& x : op) meet = meet || std::find(oq.begin(), oq.end(), x) != oq.end();
      CHECK(same == meet);
    }
  }
}

TEST_CASE("rho fibres are orbits on E[n]") {
  for (std::uint64_t n : {3, 5, 7, 9}) {
    const auto e = ss(ec::torsion_field_degree(n));
    const auto all = ec::enumerate_torsion(e, ec::torsion_basis(e, n, 3));
    std::vector<CurvePoint> pts;
    for (const auto& p : all) {
      if (!p.is_infinity()) pts.push_back(p);
    }
    std::vector<std::vector<CurvePoint>> orbits;
    for (const auto& p : pts) orbits.push_back(aut_orbit(e, p));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = 0; j < pts.size(); ++j) {
        CHECK((rho(pts[i]) == rho(pts[j])) == (orbits[i] == orbits[j]));
      }
    }
  }
}

TEST_CASE("classification of torsion") {
  const auto c3 = classify_torsion(3);
  REQUIRE(c3.size() == 1);
  CHECK(c3[0].rho_value.is_zero());
  CHECK(c3[0].moduli_degree == 1);
  const auto c5 = classify_torsion(5);
  REQUIRE(c5.size() == 1);
  CHECK(c5[0].rho_value.is_one());
  CHECK(c5[0].moduli_degree == 1);
  CHECK(classify_torsion(7).size() == 2);
  CHECK(classify_torsion(9).size() == 3);
  CHECK(classify_torsion(11).size() == 5);
  CHECK(classify_torsion(13).size() == 7);
  for (std::uint64_t n : {5, 7, 9, 11, 13}) {
    std::uint64_t total = 0;
    for (const auto& c : classify_torsion(n, 9)) {
      CHECK(c.orbit_size == 24);
      total += c.orbit_size;
      CHECK(rho(c.representative) == c.rho_value);
    }
    CHECK(total == psi(n));
  }
  CHECK(classify_torsion(3)[0].orbit_size * 3 == 24);
  // seeds change the basis, not the answer
  const auto a = classify_torsion(11, 1), b = classify_torsion(11, 2, kernels::Exec::serial);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].rho_value == b[i].rho_value);
    CHECK(a[i].representative == b[i].representative);
  }
  CHECK(to_json(ss(8), c5[0]).dump().find(R"("rho":{"d":1,"hex":"1"})") != std::string::npos);
}

TEST_CASE("counting functions") {
  CHECK(psi(1) == 1);
  CHECK(psi(3) == 8);
  CHECK(psi(5) == 24);
  CHECK(psi(9) == 72);
  CHECK(psi(35) == 1152);
  CHECK(eta_closed_form(2) == 2);
  CHECK(eta_closed_form(6) == 12);
  CHECK(degree_count_true(2) == 2);
  CHECK(degree_count_true(6) == 54);
  for (int d = 1; d <= 12; ++d) CHECK(degree_count_true(d) == scan_degree_count(d));
  for (int d : {2, 3, 4, 5, 8, 9}) CHECK(eta_closed_form(d) == degree_count_true(d));
  CHECK(lame_count_dividing(5) == 1);
  CHECK(lame_count_dividing(7) == 2);
  CHECK(lame_count_dividing(11) == 5);
  CHECK(lame_count_dividing(9) == 4);
  CHECK(lame_count_dividing(35) == 51);
  CHECK(lame_count_dividing(35) == class_count_exact(5) + class_count_exact(7) + class_count_exact(35));
  for (std::uint64_t n = 3; n <= 13; n += 2) CHECK(lame_count_dividing(n) == lame_count_dividing_brute(n));
  // Sum over divisors of psi is n^2; the formula is that identity divided by 24.
  for (std::uint64_t n = 5; n < 400; n += 2) {
    if (n % 3 == 0) continue;
    std::uint64_t s = 0;
    for (auto m : util::divisors(n)) s += psi(m);
    CHECK(s == n * n);
  }
}

TEST_CASE("field-of-moduli census") {
  const auto r1 = moduli_census(1);
  REQUIRE(r1.entries.size() == 2);
  CHECK(r1.entries[0].order == 3);
  CHECK(r1.entries[1].order == 5);
  CHECK(r1.consistent());
  const auto r2 = moduli_census(2);
  CHECK(r2.entries.size() == 4);
  CHECK(r2.by_degree.at(2) == 2);
  CHECK(r2.consistent());
  for (int d = 3; d <= 8; ++d) {
    const auto r = moduli_census(d);
    CHECK(r.consistent());
    for (const auto& c : r.entries) {
      CHECK(rho(c.representative) == gf2::embed(c.rho_value, FieldContext::of(c.point_field_degree)));
      CHECK(c.order % 2 == 1);
    }
  }
}

TEST_CASE("Galois equivariance") {
  CHECK(galois_equivariance_check(12, 1, 500, 1).passed());
  CHECK(galois_equivariance_check(12, 5, 500, 2).passed());
  CHECK(galois_equivariance_check(1, 1, 20, 3).passed());
  // the Frobenius orbit of an order-5 point stays in one class
  const auto e = ss(8);
  const auto pts = ec::exact_order_subset(e, ec::enumerate_torsion(e, ec::torsion_basis(e, 5, 0)), 5);
  for (const auto& p : pts) {
    for (int i = 1; i <= 8; ++i) {
      const CurvePoint fp(p.x().frobenius(i), p.y().frobenius(i));
      CHECK(rho(fp) == rho(p));
      CHECK(rho(fp).is_one());
    }
  }
}

TEST_CASE("supersingular covers have the tame datum") {
  for (std::uint64_t n : {3, 5, 7, 9}) {
    const auto e = ss(ec::torsion_field_degree(n));
    const auto basis = ec::torsion_basis(e, n, 0);
    const auto cover = normalized_cover(e, basis.p1, n);
    CHECK(cover.third_value.is_one());
    CHECK(e.dbl(cover.q) == basis.p1);
    const auto rep = analyze_cover(cover);
    CHECK(rep.lame_datum());
    CHECK(rep.signature == 1);
    CHECK(rep.profile.different_total == static_cast<int>(2 * n));
  }
}

TEST_CASE("ordinary covers are wild at the third point") {
  for (u64 t : {0x8, 0xa, 0xc}) {
    const auto base = WeierstrassCurve::ordinary(FieldContext::of(4).element(t));
    for (std::uint64_t n : {3, 5, 7}) {
      const int d = ec::ordinary_torsion_field_degree(base, n);
      REQUIRE(d > 0);
      const auto e = base.embed(FieldContext::of(d));
      const auto pts = ec::exact_order_subset(e, ec::enumerate_points(e), n);
      REQUIRE_FALSE(pts.empty());
      const auto cover = normalized_cover(e, pts.front(), n);
      const auto rep = analyze_cover(cover);
      CHECK(rep.index_at_q == 2);
      CHECK(rep.different_at_q == 2);
      CHECK_FALSE(rep.tame_at_q);
      CHECK(rep.single_third_point);
      CHECK(rep.profile.certified());
      CHECK_FALSE(rep.lame_datum());
    }
  }
}

TEST_CASE("dichotomy on small fields") {
  std::vector<std::pair<WeierstrassCurve, std::vector<CurvePoint>>> sup, ord;
  for (int d = 1; d <= 6; ++d) sup.push_back({ss(d), ec::enumerate_points(ss(d))});
  const auto o = WeierstrassCurve::ordinary(FieldContext::of(4).element(0xa));
  ord.push_back({o, ec::enumerate_points(o)});
  const auto rep = dichotomy_check(sup, ord);
  CHECK(rep.holds());
  CHECK(rep.supersingular_points > 100);
  CHECK(rep.ordinary_points > 0);
}
