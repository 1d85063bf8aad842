#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lamekit/util/error.hpp"

// One function per CLI subcommand. Each runs the computation, embeds its own
// assertions and returns a JSON document plus a CSV projection.
namespace lamekit::app {

/// Bad parameters; the CLI maps this to exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Report {
  nlohmann::json json;                        // "schema": 1, "command", ..., "passed", "failures"
  std::vector<std::vector<std::string>> csv;  // first row is the header
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  /// Adds a failure message when `cond` is false.
  void require(bool cond, const std::string& what);
  /// Sets "schema", "command", "passed" and "failures".
  void finish(const std::string& command);
};

std::string to_csv_text(const std::vector<std::vector<std::string>>& rows);

/// Classes of exact order n on the supersingular curve; odd 3 <= n <= 13.
Report classify_report(std::uint64_t n, std::uint64_t seed);

/// f_P for the least point of exact order n (by serialized form). Without
/// `ordinary_t` the curve is Y^2 + Y = X^3 and the datum (n:n:3,1,...,1) is
/// asserted; with it the curve is Y^2 + XY = X^3 + tX, t in F_{2^field}, and
/// the wild index-2 point at ((n+1)/2) P + R is asserted.
Report ramify_report(std::uint64_t n, std::optional<std::uint64_t> ordinary_t, int field, std::uint64_t seed);

/// Class counts for odd 3 <= n <= max_n; brute force up to 13.
Report counts_report(std::uint64_t max_n, std::uint64_t seed);

/// Triples of odd degree n and the lifting identity at n.
Report triples_report(std::uint64_t n);

/// Field-of-moduli census over F_{2^d}, 1 <= d <= 8.
Report moduli_report(int d, std::uint64_t seed);

/// L-polynomial, certificate, #J and sampled point-pair classes of
/// Y^2 + Y = X^(2g+1) over F_{2^d}.
Report hyper_report(int genus, int field, int samples, std::uint64_t seed);

/// Weighted j and Delta against the standard formulary on random rational
/// points, and j = 0 on every Lame representative of order <= 13.
Report jcheck_report(int samples, std::uint64_t seed);

}  // namespace lamekit::app
