#pragma once

#include <map>
#include <vector>

#include "lamekit/lame/quotient.hpp"

namespace lamekit::lame {

struct CensusEntry {
  FieldElement rho_value;  // in F_{2^d}
  int moduli_degree;
  int point_field_degree;  // degree of the field holding the representative
  std::uint64_t order;
  CurvePoint representative;
};

struct CensusReport {
  int d;
  std::vector<CensusEntry> entries;      // sorted by rho bits
  std::map<int, std::uint64_t> by_degree;  // e -> classes with moduli degree e
  /// Distinct classes equal 2^d and every per-degree count matches degree_count_true.
  bool consistent() const;
};

/// For every c in F_{2^d} finds a point P with rho(P) = c. The point is
/// searched over F_{2^{mk}}, m = lcm(2, d), k in {1, 2, 3, 4, 6}: Frobenius
/// moves P inside its orbit, so its field degree over F_{2^m} is the order of
/// an element of the automorphism group. d <= 8.
CensusReport moduli_census(int d, std::uint64_t seed = 0);

/// The curve a census entry's representative lives on.
WeierstrassCurve census_curve(const CensusEntry& c);

struct EquivarianceReport {
  int field_degree;
  int frobenius_power;
  int samples;
  int failures;
  bool passed() const { return failures == 0; }
};

/// rho(phi(P)) == phi(rho(P)) on random points of E(F_{2^field_degree}), where
/// phi raises coordinates to the 2^frobenius_power-th power.
EquivarianceReport galois_equivariance_check(int field_degree, int frobenius_power, int samples, std::uint64_t seed);

nlohmann::json to_json(const CensusEntry& c);
nlohmann::json to_json(const CensusReport& r);

}  // namespace lamekit::lame
