#include "lamekit/gf2/roots.hpp"

#include <algorithm>

namespace lamekit::gf2 {

namespace {

bool is_one(const Poly& p) { return p.degree() == 0 && p.words()[0] == 1; }

// x^(q^k) mod f by repeated squaring, q = 2^d.
Poly frobenius_power_of(const Poly& h, int squarings, const Poly& f) {
  Poly r = h % f;
  for (int i = 0; i < squarings; ++i) r = r.square() % f;
  return r;
}

bool factor_less(const Factor& a, const Factor& b) {
  if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
  const auto& wa = a.poly.words();
  const auto& wb = b.poly.words();
  return std::lexicographical_compare(wa.rbegin(), wa.rend(), wb.rbegin(), wb.rend());
}

}  // namespace

FieldElement random_element(const FieldContext& ctx, std::mt19937_64& rng) {
  const u64 mask = ctx.degree() == 64 ? ~u64{0} : (u64{1} << ctx.degree()) - 1;
  return ctx.element(rng() & mask);
}

std::vector<Factor> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of zero");
  std::vector<Factor> out;
  Poly g = f.monic();
  if (g.degree() == 0) return out;
  Poly c = gcd(g, g.derivative());
  Poly w = g / c;
  int i = 1;
  while (!is_one(w)) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (!is_one(z)) out.push_back({z, i});
    ++i;
    w = y;
    c = c / y;
  }
  if (!is_one(c)) {
    // c is a polynomial in x^2: recurse on its square root.
    for (auto& fac : squarefree_decomposition(c.sqrt_of_square())) {
      out.push_back({fac.poly, 2 * fac.multiplicity});
    }
  }
  return out;
}

std::vector<std::pair<int, Poly>> distinct_degree_factorization(const Poly& f) {
  const FieldContext& ctx = f.context();
  std::vector<std::pair<int, Poly>> out;
  Poly rest = f.monic();
  const Poly x = Poly::x(ctx);
  Poly h = x % rest;
  for (int k = 1; rest.degree() >= 2 * k; ++k) {
    h = frobenius_power_of(h, ctx.degree(), rest);
    Poly g = gcd(rest, h + x);
    if (!is_one(g)) {
      out.emplace_back(k, g);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest.degree(), rest);
  return out;
}

std::vector<Poly> equal_degree_factorization(const Poly& f, int k, std::mt19937_64& rng) {
  const FieldContext& ctx = f.context();
  if (f.degree() <= k) return {f.monic()};
  const int traces = ctx.degree() * k;
  for (;;) {
    std::vector<u64> w(f.degree());
    for (auto& c : w) c = random_element(ctx, rng).bits();
    Poly h(ctx, std::move(w));
    if (h.degree() < 1) continue;
    Poly t = h, cur = h;
    for (int i = 1; i < traces; ++i) {
      cur = cur.square() % f;
      t += cur;
    }
    Poly g = gcd(f, t);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      auto left = equal_degree_factorization(g, k, rng);
      auto right = equal_degree_factorization(f / g, k, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<Factor> factor(const Poly& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Factor> out;
  for (const auto& sq : squarefree_decomposition(f)) {
    for (const auto& [k, part] : distinct_degree_factorization(sq.poly)) {
      for (auto& irr : equal_degree_factorization(part, k, rng)) out.push_back({irr, sq.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

std::vector<Root> roots_with_multiplicity(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  const FieldContext& ctx = f.context();
  std::mt19937_64 rng(seed);
  std::vector<Root> out;
  const Poly x = Poly::x(ctx);
  for (const auto& sq : squarefree_decomposition(f)) {
    Poly linear = gcd(sq.poly, frobenius_power_of(x, ctx.degree(), sq.poly) + x);
    if (linear.degree() < 1) continue;
    for (const auto& lin : equal_degree_factorization(linear, 1, rng)) {
      out.push_back({lin.coeff(0), sq.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return bits_less(a.value, b.value); });
  return out;
}

std::vector<FieldElement> poly_roots(const Poly& f, std::uint64_t seed) {
  std::vector<FieldElement> out;
  for (const auto& r : roots_with_multiplicity(f, seed)) {
    for (int i = 0; i < r.multiplicity; ++i) out.push_back(r.value);
  }
  return out;
}

}  // namespace lamekit::gf2
