#include <doctest.h>

#include <random>
#include <set>

#include "lamekit/gf2/embed.hpp"
#include "lamekit/gf2/roots.hpp"

using namespace lamekit;
using namespace lamekit::gf2;

namespace {

// Trace by its definition, using multiplication only.
int trace_oracle(const FieldElement& a) {
  FieldElement acc = a.context().zero(), cur = a;
  for (int i = 0; i < a.context().degree(); ++i) {
    acc += cur;
    cur = cur * cur;
  }
  REQUIRE((acc.is_zero() || acc.is_one()));
  return static_cast<int>(acc.bits());
}

}  // namespace

TEST_CASE("moduli are the smallest irreducibles") {
  CHECK(FieldContext::of(1).modulus() == 0b10);
  CHECK(FieldContext::of(2).modulus() == 0b111);
  CHECK(FieldContext::of(3).modulus() == 0b1011);
  CHECK(FieldContext::of(4).modulus() == 0b10011);
  CHECK(FieldContext::of(8).modulus() == 0x11b);
  // brute force: no smaller irreducible of degree 8 or 12
  for (int d : {8, 12}) {
    const u64 m = FieldContext::of(d).modulus();
    for (u64 cand = u64{1} << d; cand < m; ++cand) CHECK_FALSE(is_irreducible(cand));
  }
  CHECK(&FieldContext::of(5) == &FieldContext::of(5));
}

TEST_CASE("field arithmetic examples") {
  const auto& f2 = FieldContext::of(1);
  CHECK((f2.one() + f2.one()).is_zero());
  const auto& f4 = FieldContext::of(2);
  const FieldElement g = f4.generator();
  CHECK((g * (g + f4.one())).is_one());
  CHECK(f4.one() / g == g + f4.one());
  CHECK(g + f4.zero() == g);
  CHECK_THROWS_AS(f4.one() / f4.zero(), DivisionByZero);
  CHECK_THROWS_AS(f4.one() + FieldContext::of(4).one(), ContextMismatch);
}

TEST_CASE("trace and Artin-Schreier") {
  CHECK(trace(FieldContext::of(3).zero()) == 0);
  CHECK(trace(FieldContext::of(1).one()) == 1);
  const auto& f4 = FieldContext::of(2);
  const FieldElement w = f4.generator();
  CHECK(trace(w) == 1);

  CHECK(solve_artin_schreier(f4.zero()) == std::vector<FieldElement>{f4.zero(), f4.one()});
  CHECK(solve_artin_schreier(FieldContext::of(1).one()).empty());
  CHECK(solve_artin_schreier(f4.one()) == std::vector<FieldElement>{w, w * w});

  for (int d = 1; d <= 8; ++d) {
    const auto& ctx = FieldContext::of(d);
    for (u64 c = 0; c < ctx.size(); ++c) {
      const FieldElement e = ctx.element(c);
      REQUIRE(trace(e) == trace_oracle(e));
      const auto sols = solve_artin_schreier(e);
      CHECK(sols.empty() == (trace(e) == 1));
      for (const auto& y : sols) CHECK(y * y + y == e);
      if (!sols.empty()) CHECK(sols[0] + sols[1] == ctx.one());
    }
  }
  // large degrees, odd and even paths
  std::mt19937_64 rng(7);
  for (int d : {23, 24, 48, 56, 63}) {
    const auto& ctx = FieldContext::of(d);
    for (int i = 0; i < 200; ++i) {
      const FieldElement c = random_element(ctx, rng);
      const auto sols = solve_artin_schreier(c);
      CHECK(sols.empty() == (trace(c) == 1));
      for (const auto& y : sols) CHECK(y * y + y == c);
    }
  }
}

TEST_CASE("field axioms and Frobenius on random elements") {
  std::mt19937_64 rng(1);
  for (int d : {1, 2, 5, 8, 13, 24, 31, 56, 63}) {
    const auto& ctx = FieldContext::of(d);
    for (int i = 0; i < 300; ++i) {
      const auto a = random_element(ctx, rng), b = random_element(ctx, rng), c = random_element(ctx, rng);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b).square() == a.square() + b.square());
      CHECK((a * b).square() == a.square() * b.square());
      CHECK(a.frobenius(d) == a);
      CHECK(a.sqrt().square() == a);
      if (!a.is_zero()) CHECK(a * a.inverse() == ctx.one());
    }
  }
}

TEST_CASE("poly_roots examples") {
  const auto& f2 = FieldContext::of(1);
  const auto z = f2.zero(), o = f2.one();
  CHECK(poly_roots(Poly{z, o, o}) == std::vector<FieldElement>{z, o});
  CHECK(poly_roots(Poly{o, o, o}).empty());
  const auto& f4 = FieldContext::of(2);
  const FieldElement w = f4.generator();
  CHECK(poly_roots(Poly{f4.one(), f4.one(), f4.one()}) == std::vector<FieldElement>{w, w * w});
  // (x^4 + x)^3 over F_2
  Poly q{z, o, z, z, o};
  CHECK(poly_roots(q * q * q) == std::vector<FieldElement>{z, z, z, o, o, o});
  CHECK_THROWS_AS(poly_roots(Poly(f2)), DomainError);
}

TEST_CASE("poly_roots agrees with exhaustive evaluation") {
  std::mt19937_64 rng(11);
  for (int d = 1; d <= 8; ++d) {
    const auto& ctx = FieldContext::of(d);
    for (int trial = 0; trial < 40; ++trial) {
      // mix random polynomials with products of planted linear factors
      Poly f = Poly::constant(ctx.one());
      const int planted = static_cast<int>(rng() % 6);
      for (int i = 0; i < planted; ++i) f *= Poly{random_element(ctx, rng), ctx.one()};
      const int extra = static_cast<int>(rng() % (13 - planted));
      std::vector<u64> w(extra + 1);
      for (auto& c : w) c = random_element(ctx, rng).bits();
      w.back() = 1;
      f *= Poly(ctx, w);
      const auto roots = roots_with_multiplicity(f, trial);
      std::set<u64> found;
      for (const auto& r : roots) {
        found.insert(r.value.bits());
        // multiplicity: (x - r)^m divides f exactly
        Poly lin{r.value, ctx.one()};
        Poly g = f;
        int m = 0;
        while ((g % lin).is_zero()) {
          g = g / lin;
          ++m;
        }
        CHECK(m == r.multiplicity);
      }
      for (u64 x = 0; x < ctx.size(); ++x) CHECK(f(ctx.element(x)).is_zero() == (found.count(x) == 1));
    }
  }
}

TEST_CASE("factorization reproduces the input") {
  std::mt19937_64 rng(5);
  for (int d : {1, 3, 4, 6}) {
    const auto& ctx = FieldContext::of(d);
    for (int trial = 0; trial < 20; ++trial) {
      Poly f = Poly::constant(ctx.one());
      for (int i = 0; i < 4; ++i) {
        std::vector<u64> w(1 + rng() % 4);
        for (auto& c : w) c = random_element(ctx, rng).bits();
        w.push_back(1);
        Poly p(ctx, w);
        f *= p;
        if (rng() % 3 == 0) f *= p;
      }
      Poly back = Poly::constant(ctx.one());
      for (const auto& fac : factor(f, trial)) {
        CHECK(fac.poly.is_monic());
        CHECK(factor(fac.poly, 99).size() == 1);
        for (int i = 0; i < fac.multiplicity; ++i) back *= fac.poly;
      }
      CHECK(back == f.monic());
    }
  }
}

TEST_CASE("embeddings") {
  const auto& f4 = FieldContext::of(2);
  const auto& f16 = FieldContext::of(4);
  const auto& f64 = FieldContext::of(6);
  CHECK(embed(f4.zero(), f16).is_zero());
  CHECK(embed(f4.one(), f64).is_one());
  const FieldElement w = f4.generator();
  // the image is a primitive cube root of unity, hence a fifth power in F_16
  const FieldElement wi = embed(w, f16);
  CHECK(wi.pow(3).is_one());
  CHECK_FALSE(wi.is_one());
  bool fifth_power = false;
  for (u64 z = 1; z < 16; ++z) fifth_power = fifth_power || f16.element(z).pow(5) == wi;
  CHECK(fifth_power);
  CHECK(element_degree(f4.zero()) == 1);
  CHECK(element_degree(w) == 2);
  CHECK(element_degree(embed(w, f64)) == 2);
  CHECK_THROWS_AS(embed(w, FieldContext::of(3)), DomainError);

  std::mt19937_64 rng(3);
  const std::vector<std::pair<int, int>> pairs{{1, 4}, {2, 4}, {2, 12}, {3, 12}, {4, 12}, {6, 12}, {4, 24}, {8, 24}, {12, 24}, {6, 48}};
  for (auto [e, d] : pairs) {
    const auto& src = FieldContext::of(e);
    const auto& dst = FieldContext::of(d);
    for (int i = 0; i < 100; ++i) {
      const auto a = random_element(src, rng), b = random_element(src, rng);
      CHECK(embed(a + b, dst) == embed(a, dst) + embed(b, dst));
      CHECK(embed(a * b, dst) == embed(a, dst) * embed(b, dst));
      CHECK(element_degree(embed(a, dst)) == element_degree(a));
      CHECK(descend(embed(a, dst), src) == a);
    }
  }
  // compatibility of the lattice of embeddings
  const std::vector<std::tuple<int, int, int>> chains{{2, 4, 12}, {2, 6, 12}, {3, 6, 12}, {4, 12, 24}, {2, 8, 24}, {3, 12, 24}, {1, 2, 4}};
  for (auto [e, m, d] : chains) {
    const auto& src = FieldContext::of(e);
    for (int i = 0; i < 50; ++i) {
      const auto a = random_element(src, rng);
      CHECK(embed(embed(a, FieldContext::of(m)), FieldContext::of(d)) == embed(a, FieldContext::of(d)));
    }
  }
  // an element outside the subfield does not descend
  CHECK_FALSE(descend(f16.generator(), f4).has_value());
  CHECK(minimal_field_representative(embed(w, f64)) == w);
}

TEST_CASE("serialization") {
  const auto a = FieldContext::of(4).element(0xb);
  nlohmann::json j = a;
  CHECK(j.dump() == R"({"d":4,"hex":"b"})");
  CHECK(field_element_from_json(j) == a);
}
