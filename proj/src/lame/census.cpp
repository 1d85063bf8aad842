#include "lamekit/lame/census.hpp"

#include <random>

#include "lamekit/gf2/embed.hpp"
#include "lamekit/gf2/roots.hpp"
#include "lamekit/lame/counting.hpp"
#include "lamekit/util/intmath.hpp"

namespace lamekit::lame {

bool CensusReport::consistent() const {
  if (entries.size() != util::pow2(d)) return false;
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].rho_value == entries[i - 1].rho_value) return false;
  }
  std::uint64_t total = 0;
  for (auto [e, count] : by_degree) {
    if (d % e != 0 || count != degree_count_true(e)) return false;
    total += count;
  }
  for (auto e : util::divisors(static_cast<std::uint64_t>(d))) {
    if (!by_degree.count(static_cast<int>(e))) return false;
  }
  return total == entries.size();
}

namespace {

// A point with rho = c over `ctx`, if one is rational there.
std::optional<CurvePoint> point_with_rho(const FieldElement& c, const FieldContext& ctx, std::uint64_t seed) {
  const FieldElement cc = gf2::embed(c, ctx);
  // (x^4 + x)^3 + c = x^12 + x^9 + x^6 + x^3 + c
  std::vector<u64> w(13, 0);
  w[12] = w[9] = w[6] = w[3] = 1;
  w[0] = cc.bits();
  const auto e = WeierstrassCurve::supersingular(ctx);
  std::optional<CurvePoint> best;
  for (const auto& x : gf2::poly_roots(gf2::Poly(ctx, w), seed)) {
    const auto lifts = e.lift_x(x);
    if (lifts.empty()) continue;
    for (const auto& p : aut_orbit(e, lifts.front())) {
      if (!best || ec::serialized_less(e, p, *best)) best = p;
    }
    break;
  }
  return best;
}

}  // namespace

CensusReport moduli_census(int d, std::uint64_t seed) {
  if (d < 1 || d > 8) throw DomainError("moduli_census supports 1 <= d <= 8");
  const FieldContext& base = FieldContext::of(d);
  const int m = static_cast<int>(util::lcm(2, static_cast<std::uint64_t>(d)));
  CensusReport rep{d, {}, {}};
  for (u64 bits = 0; bits < base.size(); ++bits) {
    const FieldElement c = base.element(bits);
    std::optional<CensusEntry> entry;
    for (int k : {1, 2, 3, 4, 6}) {
      if (m * k > 63) continue;
      const FieldContext& ctx = FieldContext::of(m * k);
      if (auto p = point_with_rho(c, ctx, seed)) {
        const auto e = WeierstrassCurve::supersingular(ctx);
        entry = CensusEntry{c, gf2::element_degree(c), m * k, ec::point_order(e, *p), *p};
        break;
      }
    }
    if (!entry) throw Error("no point with rho = " + c.hex() + " over the searched fields");
    if (rho(entry->representative) != gf2::embed(c, entry->representative.x().context())) {
      throw Error("census representative has the wrong rho value");
    }
    ++rep.by_degree[entry->moduli_degree];
    rep.entries.push_back(*entry);
  }
  return rep;
}

WeierstrassCurve census_curve(const CensusEntry& c) {
  return WeierstrassCurve::supersingular(FieldContext::of(c.point_field_degree));
}

EquivarianceReport galois_equivariance_check(int field_degree, int frobenius_power, int samples, std::uint64_t seed) {
  const FieldContext& ctx = FieldContext::of(field_degree);
  const auto e = WeierstrassCurve::supersingular(ctx);
  std::mt19937_64 rng(seed);
  EquivarianceReport rep{field_degree, frobenius_power, samples, 0};
  for (int i = 0; i < samples; ++i) {
    CurvePoint p = ec::random_point(e, rng);
    if (p.is_infinity()) continue;
    const CurvePoint fp(p.x().frobenius(frobenius_power), p.y().frobenius(frobenius_power));
    if (!e.contains(fp) || rho(fp) != rho(p).frobenius(frobenius_power)) ++rep.failures;
  }
  return rep;
}

nlohmann::json to_json(const CensusEntry& c) {
  return {{"n", c.order},
          {"rho", c.rho_value},
          {"moduli_degree", c.moduli_degree},
          {"rep", ec::point_to_json(census_curve(c), c.representative)}};
}

nlohmann::json to_json(const CensusReport& r) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : r.entries) classes.push_back(to_json(c));
  nlohmann::json by_degree = nlohmann::json::object();
  for (auto [e, count] : r.by_degree) {
    by_degree[std::to_string(e)] = {{"classes", count}, {"expected", degree_count_true(e)}};
  }
  return {{"d", r.d}, {"classes", classes}, {"by_degree", by_degree}, {"consistent", r.consistent()}};
}

}  // namespace lamekit::lame
