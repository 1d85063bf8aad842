#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace lamekit::triples {

/// Cyclic composition (a, b, c) of n = a + b + c, stored as the least rotation.
struct Triple {
  std::uint64_t a, b, c;

  std::uint64_t degree() const { return a + b + c; }
  /// abc mod 2: 1 exactly when a, b, c are all odd.
  int signature() const { return static_cast<int>((a & b & c) & 1); }
  bool primitive() const;
  auto operator<=>(const Triple&) const = default;
};

Triple canonicalize(const Triple& t);

/// Canonical triples of degree n (n >= 3) passing the filters, sorted.
/// Odd n only: the even-order rule is not specified.
std::vector<Triple> enumerate_triples(std::uint64_t n, std::optional<int> signature = std::nullopt,
                                      bool primitive_only = true);

/// Number of rotation classes of compositions of n into three parts:
/// (C(n-1, 2) + 2 [3 | n]) / 3.
std::uint64_t burnside_class_count(std::uint64_t n);

struct LiftingReport {
  std::uint64_t n;
  std::uint64_t signature_one;        // primitive signature-1 triples of degree n
  std::uint64_t psi_over_24;          // class count of exact order n in characteristic 2
  std::uint64_t cumulative_triples;   // sum over divisors m > 1 of signature-1 triples
  std::uint64_t cumulative_expected;  // lame_count_dividing(n)
  std::optional<std::uint64_t> brute_classes;  // classify_torsion(n).size(), n <= 13
  bool holds() const;
};

/// Compares triple counts with the characteristic-2 counts. The brute-force
/// classification is included for n <= 13 when `brute` is set.
LiftingReport lifting_count_check(std::uint64_t n, bool brute = false, std::uint64_t seed = 0);

/// "n,a,b,c,signature,primitive" header plus one row per triple.
std::string to_csv(const std::vector<Triple>& ts);

nlohmann::json to_json(const Triple& t);
nlohmann::json to_json(const LiftingReport& r);

}  // namespace lamekit::triples
