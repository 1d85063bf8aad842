#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "lamekit/gf2/poly.hpp"
#include "lamekit/kernels/kernels.hpp"

// The family C_g : Y^2 + Y = X^(2g+1) over F_{2^d}, its L-polynomial and
// Jacobian arithmetic in Mumford form (h = 1 throughout).
namespace lamekit::hyper {

using gf2::FieldContext;
using gf2::FieldElement;
using gf2::Poly;
using Integer = boost::multiprecision::cpp_int;

class HyperPoint {
 public:
  HyperPoint() = default;  // the point at infinity
  HyperPoint(FieldElement x, FieldElement y) : inf_(false), x_(x), y_(y) {}

  bool is_infinity() const { return inf_; }
  const FieldElement& x() const;
  const FieldElement& y() const;

  bool operator==(const HyperPoint& o) const {
    return inf_ == o.inf_ && (inf_ || (x_ == o.x_ && y_ == o.y_));
  }

 private:
  bool inf_ = true;
  FieldElement x_, y_;
};

/// Integer polynomial L(T) = sum c_i T^i of degree 2g over F_q, q = 2^q_log.
struct LPolynomial {
  int genus = 0;
  int q_log = 1;
  std::vector<Integer> coeffs;  // c_0 .. c_{2g}

  /// L(1) = #J(F_q).
  Integer at_one() const;
  /// prod (1 - alpha_i^k T), the L-polynomial over F_{q^k}.
  LPolynomial base_change(int k) const;
  /// s_1 .. s_n with s_k = sum alpha_i^k.
  std::vector<Integer> power_sums(int n) const;
  /// Throws DomainError unless c_0 = 1, deg = 2g and c_{2g-i} = q^(g-i) c_i.
  void validate() const;
  bool operator==(const LPolynomial& o) const = default;
};

class HyperellipticCurve {
 public:
  HyperellipticCurve(int genus, const FieldContext& ctx);

  int genus() const { return g_; }
  const FieldContext& context() const { return *ctx_; }
  /// X^(2g+1)
  Poly f() const;
  Poly h() const { return Poly::constant(ctx_->one()); }

  bool contains(const HyperPoint& p) const;
  /// (x, y) -> (x, y + 1); fixes infinity.
  HyperPoint involution(const HyperPoint& p) const;

  /// Affine points over x plus the one point at infinity.
  std::uint64_t count_points(kernels::Exec exec = kernels::Exec::parallel) const;
  /// Points sorted by (x, y) bits after infinity; d <= 16.
  std::vector<HyperPoint> enumerate_points() const;
  HyperPoint random_affine_point(std::mt19937_64& rng) const;

  /// L over the curve's own field, by base change from the F_2 counts.
  LPolynomial lpoly() const;
  /// #J(F_{2^d}); throws DomainError when it overflows 64 bits.
  std::uint64_t jacobian_order() const;

 private:
  int g_;
  const FieldContext* ctx_;
};

/// Newton's identities from #C(F_{q^k}), k = 1..counts.size() (at least g).
/// Coefficients past the counts come from the functional equation; any
/// surplus counts are checked against it and a mismatch throws DomainError.
LPolynomial zeta_lpoly(int genus, const std::vector<std::uint64_t>& counts, int q_log = 1);

/// L from exhaustive counts over F_{2^(q_log k)}; needs q_log * g <= 20.
LPolynomial lpoly_by_counting(int genus, int q_log);

struct NewtonPolygonCertificate {
  bool supersingular = false;
  /// (i, v_2(c_i)) for every nonzero c_i.
  std::vector<std::pair<int, int>> points;
  /// Vertices of the lower convex hull.
  std::vector<std::pair<int, int>> polygon;
  /// First index breaking v_2(c_i) >= i q_log / 2, or -1.
  int witness = -1;
};

/// Slope q_log/2 throughout. Throws DomainError for a malformed L.
NewtonPolygonCertificate is_supersingular(const LPolynomial& l);

/// Reduced divisor class in Mumford form: u monic, deg v < deg u <= g,
/// u | v^2 + v + f.
struct MumfordDivisor {
  Poly u, v;

  static MumfordDivisor identity(const FieldContext& ctx);
  bool is_identity() const { return u.degree() == 0; }
  bool operator==(const MumfordDivisor& o) const { return u == o.u && v == o.v; }
};

bool is_valid(const HyperellipticCurve& c, const MumfordDivisor& d);
/// (P) - infinity as (X - x_P, y_P); infinity maps to the identity.
MumfordDivisor divisor_of_point(const HyperellipticCurve& c, const HyperPoint& p);
MumfordDivisor cantor_add(const HyperellipticCurve& c, const MumfordDivisor& a, const MumfordDivisor& b);
/// (u, v + 1 mod u)
MumfordDivisor cantor_negate(const HyperellipticCurve& c, const MumfordDivisor& a);
MumfordDivisor cantor_multiply(const HyperellipticCurve& c, std::uint64_t m, const MumfordDivisor& a);

/// [(P) - (sigma P)]; throws DomainError at infinity.
MumfordDivisor class_of_point_pair(const HyperellipticCurve& c, const HyperPoint& p);
/// Exact order by stripping primes from #J.
std::uint64_t divisor_class_order(const HyperellipticCurve& c, const MumfordDivisor& d);

/// Orders of [(P) - (sigma P)] for sampled P, with the classes whose order
/// is even or below 2g + 1 listed separately.
struct PointPairReport {
  int genus = 0;
  int field_degree = 0;
  std::uint64_t jacobian_order = 0;
  std::vector<std::pair<HyperPoint, std::uint64_t>> samples;
  std::vector<std::pair<HyperPoint, std::uint64_t>> violations;
  bool all_odd = true;
};
PointPairReport point_pair_orders(const HyperellipticCurve& c, int samples, std::uint64_t seed);

void to_json(nlohmann::json& j, const MumfordDivisor& d);
void to_json(nlohmann::json& j, const LPolynomial& l);
void to_json(nlohmann::json& j, const NewtonPolygonCertificate& c);
void to_json(nlohmann::json& j, const HyperPoint& p);
void to_json(nlohmann::json& j, const PointPairReport& r);

}  // namespace lamekit::hyper
