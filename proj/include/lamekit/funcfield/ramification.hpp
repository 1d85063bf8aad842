#pragma once

#include <optional>
#include <vector>

#include "lamekit/funcfield/expansion.hpp"

namespace lamekit::funcfield {

/// A point of P^1(k): a field element or infinity (nothing).
using BranchValue = std::optional<FieldElement>;

struct FiberPoint {
  CurvePoint point;
  int multiplicity;
  int different;
  bool tame() const { return multiplicity % 2 == 1; }
};

/// Part of a fibre not rational over the working field: an irreducible
/// factor of the x-norm (degree > 1), or a rational x whose y escapes.
struct UnresolvedFactor {
  Poly factor;
  int multiplicity;  // in the norm
  bool y_escapes;
};

struct Fiber {
  BranchValue value;
  std::vector<FiberPoint> points;  // sorted by serialized point
  std::vector<UnresolvedFactor> unresolved;
  int resolved_multiplicity() const;
  bool complete() const { return unresolved.empty(); }
};

/// All points with f = v over the working field, with multiplicities and
/// different exponents. f nonconstant.
Fiber fiber(const CurveRationalFunction& f, const BranchValue& v, std::uint64_t seed = 0);

struct RamificationProfile {
  std::vector<Fiber> fibers;             // one per claimed value
  std::vector<FiberPoint> unclaimed;     // ramified points outside the claimed fibres
  std::vector<Poly> unsearched;          // zero-locus factors of df that could not be resolved
  int degree = 0;                        // deg f
  int different_total = 0;               // sum of d_Q over resolved points
  /// Riemann-Hurwitz on a genus-1 source: sum d_Q = 2 deg f.
  int expected_total() const { return 2 * degree; }
  bool certified() const { return different_total == expected_total(); }
};

/// Fibres over the claimed values plus the completeness certificate. When the
/// claimed fibres fall short, the zeros of df are searched for the rest.
RamificationProfile ramification_profile(const CurveRationalFunction& f, const std::vector<BranchValue>& claimed,
                                         std::uint64_t seed = 0);

nlohmann::json to_json(const WeierstrassCurve& e, const Fiber& fib);
nlohmann::json to_json(const WeierstrassCurve& e, const RamificationProfile& prof);

}  // namespace lamekit::funcfield
