#include "lamekit/lame/automorphism.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>

#include "lamekit/gf2/embed.hpp"

namespace lamekit::lame {

CurvePoint AutomorphismElement::apply(const CurvePoint& p) const {
  if (p.is_infinity()) return p;
  const FieldElement u2 = u.square();
  return {u2 * p.x() + a, p.y() + u2 * a.square() * p.x() + c};
}

AutomorphismElement AutomorphismElement::operator*(const AutomorphismElement& o) const {
  const FieldElement u2 = u.square();
  return {o.u * u, u2 * o.a + a, o.c + c + u2 * a.square() * o.a};
}

namespace {

std::vector<AutomorphismElement> build(const FieldContext& ctx) {
  if (ctx.degree() % 2 != 0) throw DomainError("automorphisms need F_4 inside the working field");
  const FieldElement w = gf2::embed(FieldContext::of(2).generator(), ctx);
  const std::vector<FieldElement> cube_roots{ctx.one(), w, w.square()};
  const std::vector<FieldElement> f4{ctx.zero(), ctx.one(), w, w.square()};
  std::vector<AutomorphismElement> g;
  for (const auto& u : cube_roots) {
    for (const auto& a : f4) {
      for (const auto& c : gf2::solve_artin_schreier(a.pow(3))) g.push_back({u, a, c});
    }
  }
  std::sort(g.begin(), g.end(), [](const auto& l, const auto& r) {
    if (l.is_identity() != r.is_identity()) return l.is_identity();
    return std::tuple(l.u.bits(), l.a.bits(), l.c.bits()) < std::tuple(r.u.bits(), r.a.bits(), r.c.bits());
  });
  return g;
}

void verify(const FieldContext& ctx, const std::vector<AutomorphismElement>& g) {
  const auto e = WeierstrassCurve::supersingular(ctx);
  auto fail = [&](const std::string& what) {
    throw Error("automorphism self-check failed over F_2^" + std::to_string(ctx.degree()) + ": " + what);
  };
  if (g.size() != 24) fail("group has " + std::to_string(g.size()) + " elements");
  std::mt19937_64 rng(0x5eed + static_cast<unsigned>(ctx.degree()));
  std::vector<CurvePoint> sample;
  for (int i = 0; i < 8; ++i) sample.push_back(ec::random_point(e, rng));
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (g[i] == g[j]) fail("repeated parameter");
    }
  }
  bool abelian = true;
  for (const auto& s : g) {
    for (const auto& p : sample) {
      if (!e.contains(s.apply(p))) fail("image leaves the curve");
    }
    for (const auto& t : g) {
      const AutomorphismElement st = s * t;
      if (std::find(g.begin(), g.end(), st) == g.end()) fail("not closed under composition");
      if (!(st == t * s)) abelian = false;
      for (const auto& p : sample) {
        if (!(st.apply(p) == s.apply(t.apply(p)))) fail("composition rule disagrees with the action");
      }
    }
    for (std::size_t i = 0; i + 1 < sample.size(); ++i) {
      const auto& p = sample[i];
      const auto& q = sample[i + 1];
      if (!(s.apply(e.add(p, q)) == e.add(s.apply(p), s.apply(q)))) fail("not additive");
    }
  }
  if (abelian) fail("group is abelian");
}

}  // namespace

const std::vector<AutomorphismElement>& aut_group(const FieldContext& ctx) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<AutomorphismElement>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[ctx.degree()];
  if (!slot) {
    auto g = build(ctx);
    verify(ctx, g);
    slot = std::make_unique<std::vector<AutomorphismElement>>(std::move(g));
  }
  return *slot;
}

std::vector<CurvePoint> aut_orbit(const WeierstrassCurve& e, const CurvePoint& p) {
  if (!e.is_supersingular_model()) throw DomainError("aut_orbit works on Y^2 + Y = X^3");
  if (!e.contains(p)) throw DomainError("point not on the curve");
  std::vector<CurvePoint> out;
  for (const auto& g : aut_group(e.context())) out.push_back(g.apply(p));
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return ec::serialized_less(e, a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

nlohmann::json to_json(const AutomorphismElement& g) { return {{"u", g.u}, {"a", g.a}, {"c", g.c}}; }

}  // namespace lamekit::lame
