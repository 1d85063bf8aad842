#include "lamekit/lame/cover.hpp"

#include <omp.h>

namespace lamekit::lame {

LameCover normalized_cover(const WeierstrassCurve& e, const CurvePoint& p, std::uint64_t n) {
  if (n < 3 || n % 2 == 0) throw DomainError("covers are built for odd n > 1");
  if (!ec::has_exact_order(e, p, n)) throw DomainError("P must have exact order n");
  const FieldContext& k = e.context();
  const auto raw = funcfield::miller_function(e, p, n);
  CurvePoint q = e.multiply((n + 1) / 2, p);
  CurvePoint anchor = q;
  if (!e.is_supersingular_model()) {
    if (!(e.a1().is_one() && e.a2().is_zero() && e.a3().is_zero() && e.a6().is_zero())) {
      throw DomainError("normalized_cover expects Y^2 + Y = X^3 or Y^2 + XY = X^3 + tX");
    }
    const CurvePoint r(k.zero(), k.zero());
    q = e.add(q, r);
    anchor = r;
  }
  const auto at_anchor = funcfield::value_at(raw, anchor);
  if (!at_anchor || at_anchor->is_zero()) throw Error("f_P vanishes or has a pole at the normalization point");
  const auto f = raw * at_anchor->inverse();
  const auto third = funcfield::value_at(f, q);
  if (!third) throw Error("f_P has a pole at Q");
  return {e, p, n, q, f, *third};
}

CoverReport analyze_cover(const LameCover& cover, std::uint64_t seed) {
  const auto& e = cover.curve;
  const FieldContext& k = e.context();
  CoverReport rep{};
  rep.n = cover.n;
  rep.supersingular = e.is_supersingular_model();
  rep.profile = funcfield::ramification_profile(cover.f, {std::nullopt, k.zero(), cover.third_value}, seed);
  const auto loc = funcfield::local_ramification(cover.f, cover.q);
  rep.index_at_q = loc.index;
  rep.different_at_q = loc.different;
  rep.tame_at_q = loc.tame();
  // ramified points besides P and 0_E
  int others = 0;
  bool q_seen = false;
  auto scan = [&](const std::vector<funcfield::FiberPoint>& pts) {
    for (const auto& fp : pts) {
      if (fp.different == 0 || fp.point == cover.p || fp.point.is_infinity()) continue;
      ++others;
      q_seen = q_seen || fp.point == cover.q;
    }
  };
  for (const auto& fib : rep.profile.fibers) scan(fib.points);
  scan(rep.profile.unclaimed);
  rep.single_third_point = others == 1 && q_seen && rep.profile.certified();
  rep.signature = ec::point_order(e, cover.q) == cover.n ? 1 : 0;
  return rep;
}

DichotomyReport dichotomy_check(
    const std::vector<std::pair<WeierstrassCurve, std::vector<CurvePoint>>>& supersingular_sets,
    const std::vector<std::pair<WeierstrassCurve, std::vector<CurvePoint>>>& ordinary_sets, std::uint64_t seed) {
  DichotomyReport rep;
  auto run = [&](const auto& sets, bool supersingular) {
    for (const auto& [e, pts] : sets) {
      std::vector<std::pair<const CurvePoint*, std::uint64_t>> work;
      for (const auto& p : pts) {
        if (p.is_infinity()) continue;
        const std::uint64_t n = ec::point_order(e, p);
        if (n % 2 == 1) work.push_back({&p, n});
      }
      std::vector<CoverReport> out(work.size());
      const auto count = static_cast<std::int64_t>(work.size());
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t i = 0; i < count; ++i) {
        const auto& [p, n] = work[static_cast<std::size_t>(i)];
        out[static_cast<std::size_t>(i)] = analyze_cover(normalized_cover(e, *p, n), seed);
      }
      for (const auto& r : out) {
        if (supersingular) {
          ++rep.supersingular_points;
          rep.supersingular_lame += r.lame_datum();
        } else {
          ++rep.ordinary_points;
          rep.ordinary_tame_index3 += (r.index_at_q == 3 && r.tame_at_q);
          rep.ordinary_wild_index2 += (r.index_at_q == 2 && r.different_at_q == 2 && r.single_third_point);
        }
      }
    }
  };
  run(supersingular_sets, true);
  run(ordinary_sets, false);
  return rep;
}

nlohmann::json to_json(const LameCover& cover, const CoverReport& rep) {
  const auto& e = cover.curve;
  return {{"n", cover.n},
          {"curve", ec::curve_to_json(e)},
          {"P", ec::point_to_json(e, cover.p)},
          {"Q", ec::point_to_json(e, cover.q)},
          {"f", funcfield::to_json(cover.f)},
          {"third_value", cover.third_value},
          {"index_at_Q", rep.index_at_q},
          {"different_at_Q", rep.different_at_q},
          {"tame_at_Q", rep.tame_at_q},
          {"single_third_point", rep.single_third_point},
          {"signature", rep.signature},
          {"profile", funcfield::to_json(e, rep.profile)}};
}

}  // namespace lamekit::lame
