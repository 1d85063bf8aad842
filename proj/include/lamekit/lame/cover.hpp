#pragma once

#include "lamekit/funcfield/ramification.hpp"
#include "lamekit/lame/quotient.hpp"

namespace lamekit::lame {

using funcfield::CurveRationalFunction;

/// The degree-n cover f_P : E -> P^1 with divisor n(P) - n(0_E), scaled by
/// the usual convention: f_P(Q) = 1 on Y^2 + Y = X^3 with Q = ((n+1)/2) P,
/// and f_P(R) = 1 on the ordinary model with R = (0, 0) and
/// Q = ((n+1)/2) P + R.
struct LameCover {
  WeierstrassCurve curve;
  CurvePoint p;
  std::uint64_t n;
  CurvePoint q;  // the expected third ramified point
  CurveRationalFunction f;
  FieldElement third_value;  // f(Q)
};

LameCover normalized_cover(const WeierstrassCurve& e, const CurvePoint& p, std::uint64_t n);

struct CoverReport {
  std::uint64_t n;
  bool supersingular;
  funcfield::RamificationProfile profile;  // over {infinity, 0, f(Q)}
  int index_at_q;
  int different_at_q;
  bool tame_at_q;
  /// The only ramification outside {P, 0_E} is at Q, and totals balance.
  bool single_third_point;
  /// 1 when Q has order n, 0 when 2n.
  int signature;
  /// Branch datum (n:n:3,1,...,1) with a tame triple point.
  bool lame_datum() const { return single_third_point && index_at_q == 3 && tame_at_q && profile.certified(); }
};

CoverReport analyze_cover(const LameCover& cover, std::uint64_t seed = 0);

struct DichotomyReport {
  std::size_t supersingular_points = 0;
  std::size_t supersingular_lame = 0;  // with the tame index-3 datum
  std::size_t ordinary_points = 0;
  std::size_t ordinary_tame_index3 = 0;  // must stay 0
  std::size_t ordinary_wild_index2 = 0;
  bool holds() const {
    return supersingular_lame == supersingular_points && ordinary_tame_index3 == 0 &&
           ordinary_wild_index2 == ordinary_points;
  }
};

/// Runs analyze_cover over every point of odd order > 1 in `supersingular_points`
/// and `ordinary_points` (pairs of curve and point list).
DichotomyReport dichotomy_check(
    const std::vector<std::pair<WeierstrassCurve, std::vector<CurvePoint>>>& supersingular_sets,
    const std::vector<std::pair<WeierstrassCurve, std::vector<CurvePoint>>>& ordinary_sets, std::uint64_t seed = 0);

nlohmann::json to_json(const LameCover& cover, const CoverReport& rep);

}  // namespace lamekit::lame
