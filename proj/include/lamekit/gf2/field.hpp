#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lamekit/util/error.hpp"

namespace lamekit::gf2 {

using u64 = std::uint64_t;

/// Largest supported extension degree; elements are packed into one word.
inline constexpr int kMaxDegree = 63;

class FieldElement;

/// F_{2^d} = GF(2)[x]/(m) where m is the smallest irreducible polynomial of
/// degree d (as an integer bit pattern). Contexts are interned per degree and
/// never destroyed, so references and pointers to them stay valid.
class FieldContext {
 public:
  static const FieldContext& of(int degree);

  FieldContext(const FieldContext&) = delete;
  FieldContext& operator=(const FieldContext&) = delete;

  int degree() const { return degree_; }
  /// Modulus including its leading bit x^d.
  u64 modulus() const { return modulus_; }
  /// Number of field elements; only meaningful for degree < 64.
  u64 size() const { return u64{1} << degree_; }

  // Raw-word arithmetic. Inputs must already be reduced.
  u64 mul(u64 a, u64 b) const;
  u64 sqr(u64 a) const { return mul(a, a); }
  u64 inv(u64 a) const;
  u64 pow(u64 a, u64 e) const;
  int trace(u64 a) const;
  u64 sqrt(u64 a) const;
  /// One root of y^2 + y = c, or nothing when the trace of c is 1.
  std::optional<u64> artin_schreier(u64 c) const;
  /// Applies x -> x^(2^k).
  u64 frobenius(u64 a, int k) const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(u64 bits) const;
  /// The class of x, a root of the modulus.
  FieldElement generator() const;

 private:
  explicit FieldContext(int degree);

  u64 reduce(u64 lo, u64 hi) const;
  u64 apply_linear(const std::array<u64, 64>& cols, u64 a) const;

  int degree_;
  u64 modulus_;
  u64 tail_;  // modulus without its leading term
  u64 mask_;
  u64 trace_mask_;
  std::array<u64, 64> sqrt_cols_{};
  std::array<u64, 64> as_cols_{};  // particular solution map for even degree
};

/// Smallest irreducible polynomial of the given degree over GF(2).
u64 smallest_irreducible(int degree);

/// Rabin's irreducibility test for a bit polynomial of degree <= 63.
bool is_irreducible(u64 poly);

/// An element of F_{2^d}: a reduced bit polynomial tied to its context.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FieldContext& ctx, u64 bits);

  const FieldContext& context() const;
  bool bound() const { return ctx_ != nullptr; }
  u64 bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  bool is_one() const { return bits_ == 1; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const { return *this + o; }
  FieldElement operator-() const { return *this; }
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  FieldElement square() const;
  FieldElement inverse() const;
  FieldElement pow(u64 e) const;
  FieldElement sqrt() const;
  FieldElement frobenius(int k = 1) const;

  bool operator==(const FieldElement& o) const { return ctx_ == o.ctx_ && bits_ == o.bits_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string hex() const;

 private:
  const FieldContext* ctx_ = nullptr;
  u64 bits_ = 0;
};

/// Numeric order on the packed representation; used for canonical sorting.
inline bool bits_less(const FieldElement& a, const FieldElement& b) { return a.bits() < b.bits(); }

/// Absolute trace to GF(2).
int trace(const FieldElement& a);

/// Full solution set of y^2 + y = c: empty or two elements differing by 1,
/// sorted by packed bits.
std::vector<FieldElement> solve_artin_schreier(const FieldElement& c);

/// Least e with a^(2^e) = a.
int element_degree(const FieldElement& a);

/// Integer n mapped into the prime field of ctx.
inline FieldElement from_int(const FieldContext& ctx, long long n) { return ctx.element(n & 1); }

void to_json(nlohmann::json& j, const FieldElement& a);
FieldElement field_element_from_json(const nlohmann::json& j);

}  // namespace lamekit::gf2
