#include "lamekit/funcfield/ramification.hpp"

#include <algorithm>

#include "lamekit/gf2/roots.hpp"

namespace lamekit::funcfield {

int Fiber::resolved_multiplicity() const {
  int s = 0;
  for (const auto& p : points) s += p.multiplicity;
  return s;
}

namespace {

struct Candidates {
  std::vector<CurvePoint> points;
  std::vector<UnresolvedFactor> unresolved;
};

// Points over the roots of p, plus records for whatever is not rational.
void points_over(const WeierstrassCurve& e, const Poly& p, std::uint64_t seed, Candidates& out) {
  if (p.degree() <= 0) return;
  for (const auto& fac : gf2::factor(p, seed)) {
    if (fac.poly.degree() > 1) {
      out.unresolved.push_back({fac.poly, fac.multiplicity, false});
      continue;
    }
    const FieldElement x = fac.poly.coeff(0);  // monic linear: X + x
    const auto lifts = e.lift_x(x);
    if (lifts.empty()) out.unresolved.push_back({fac.poly, fac.multiplicity, true});
    for (const auto& q : lifts) out.points.push_back(q);
  }
}

bool contains_point(const std::vector<CurvePoint>& v, const CurvePoint& q) {
  return std::find(v.begin(), v.end(), q) != v.end();
}

void sort_points(const WeierstrassCurve& e, std::vector<FiberPoint>& pts) {
  std::sort(pts.begin(), pts.end(),
            [&](const FiberPoint& a, const FiberPoint& b) { return ec::serialized_less(e, a.point, b.point); });
}

}  // namespace

Fiber fiber(const CurveRationalFunction& f, const BranchValue& v, std::uint64_t seed) {
  if (f.is_constant()) throw DomainError("fiber of a constant function");
  const WeierstrassCurve& e = f.curve();
  const CurveRationalFunction g = v ? f + *v : f.inverse();
  Candidates cand;
  points_over(e, g.numerator_norm(), seed, cand);
  Fiber out{v, {}, cand.unresolved};
  for (const auto& q : cand.points) {
    const int val = valuation_at(g, q);
    if (val <= 0) continue;
    const auto loc = local_ramification(f, q);
    out.points.push_back({q, loc.index, loc.different});
  }
  if (g.valuation_at_infinity() > 0) {
    const auto loc = local_ramification(f, CurvePoint::infinity());
    out.points.push_back({CurvePoint::infinity(), loc.index, loc.different});
  }
  sort_points(e, out.points);
  return out;
}

RamificationProfile ramification_profile(const CurveRationalFunction& f, const std::vector<BranchValue>& claimed,
                                         std::uint64_t seed) {
  if (f.is_constant()) throw DomainError("ramification profile of a constant function");
  const WeierstrassCurve& e = f.curve();
  RamificationProfile prof;
  prof.degree = f.degree();
  std::vector<CurvePoint> seen;
  for (const auto& v : claimed) {
    Fiber fib = fiber(f, v, seed);
    for (const auto& p : fib.points) {
      prof.different_total += p.different;
      seen.push_back(p.point);
    }
    prof.fibers.push_back(std::move(fib));
  }
  if (prof.different_total >= prof.expected_total()) return prof;

  // Shortfall: the missing ramification sits on zeros of df, at the
  // exceptional points where X is not a local parameter, or at poles.
  Candidates cand;
  const CurveRationalFunction df = differentiate(f);
  if (!df.is_zero()) points_over(e, df.numerator_norm(), seed, cand);
  points_over(e, Poly{e.a3(), e.a1()}, seed, cand);
  points_over(e, f.d(), seed, cand);
  cand.points.push_back(CurvePoint::infinity());
  for (const auto& q : cand.points) {
    if (contains_point(seen, q)) continue;
    seen.push_back(q);
    const auto loc = local_ramification(f, q);
    if (loc.different == 0) continue;
    prof.unclaimed.push_back({q, loc.index, loc.different});
    prof.different_total += loc.different;
  }
  for (const auto& u : cand.unresolved) prof.unsearched.push_back(u.factor);
  sort_points(e, prof.unclaimed);
  return prof;
}

namespace {

nlohmann::json point_entry(const WeierstrassCurve& e, const FiberPoint& p) {
  return {{"point", ec::point_to_json(e, p.point)},
          {"multiplicity", p.multiplicity},
          {"different_exponent", p.different},
          {"tame", p.tame()}};
}

nlohmann::json unresolved_entry(const UnresolvedFactor& u) {
  nlohmann::json fac;
  gf2::to_json(fac, u.factor);
  return {{"factor", fac}, {"degree", u.factor.degree()}, {"multiplicity", u.multiplicity}, {"y_escapes", u.y_escapes}};
}

}  // namespace

nlohmann::json to_json(const WeierstrassCurve& e, const Fiber& fib) {
  nlohmann::json pts = nlohmann::json::array(), unres = nlohmann::json::array();
  for (const auto& p : fib.points) pts.push_back(point_entry(e, p));
  for (const auto& u : fib.unresolved) unres.push_back(unresolved_entry(u));
  nlohmann::json value = fib.value ? nlohmann::json(*fib.value) : nlohmann::json("infinity");
  return {{"value", value}, {"points", pts}, {"unresolved", unres}};
}

nlohmann::json to_json(const WeierstrassCurve& e, const RamificationProfile& prof) {
  nlohmann::json fibers = nlohmann::json::array(), extra = nlohmann::json::array(), unsearched = nlohmann::json::array();
  for (const auto& f : prof.fibers) fibers.push_back(to_json(e, f));
  for (const auto& p : prof.unclaimed) extra.push_back(point_entry(e, p));
  for (const auto& u : prof.unsearched) {
    nlohmann::json fac;
    gf2::to_json(fac, u);
    unsearched.push_back(fac);
  }
  return {{"degree", prof.degree},
          {"different_total", prof.different_total},
          {"expected_total", prof.expected_total()},
          {"certified", prof.certified()},
          {"fibers", fibers},
          {"unclaimed", extra},
          {"unsearched", unsearched}};
}

}  // namespace lamekit::funcfield
