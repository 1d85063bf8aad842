#include "lamekit/triples/triples.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lamekit/lame/counting.hpp"
#include "lamekit/lame/quotient.hpp"
#include "lamekit/util/error.hpp"
#include "lamekit/util/intmath.hpp"

namespace lamekit::triples {

bool Triple::primitive() const { return std::gcd(std::gcd(a, b), c) == 1; }

Triple canonicalize(const Triple& t) {
  return std::min({t, Triple{t.c, t.a, t.b}, Triple{t.b, t.c, t.a}});
}

std::vector<Triple> enumerate_triples(std::uint64_t n, std::optional<int> signature, bool primitive_only) {
  if (n < 3) throw DomainError("triples need n >= 3");
  if (n % 2 == 0) throw DomainError("only odd n is classified; the even-order rule is not specified");
  std::vector<Triple> out;
  for (std::uint64_t a = 1; a + 2 <= n; ++a) {
    for (std::uint64_t b = 1; a + b + 1 <= n; ++b) {
      const Triple t{a, b, n - a - b};
      if (!(canonicalize(t) == t)) continue;
      if (primitive_only && !t.primitive()) continue;
      if (signature && t.signature() != *signature) continue;
      out.push_back(t);
    }
  }
  return out;  // generated in lexicographic order
}

std::uint64_t burnside_class_count(std::uint64_t n) {
  if (n < 3) return 0;
  const std::uint64_t compositions = (n - 1) * (n - 2) / 2;
  return (compositions + (n % 3 == 0 ? 2 : 0)) / 3;
}

bool LiftingReport::holds() const {
  const bool exact = n == 3 ? signature_one == 1 : signature_one == psi_over_24;
  const bool brute_ok = !brute_classes || *brute_classes == signature_one;
  return exact && cumulative_triples == cumulative_expected && brute_ok;
}

LiftingReport lifting_count_check(std::uint64_t n, bool brute, std::uint64_t seed) {
  if (n < 3 || n % 2 == 0) throw DomainError("lifting_count_check needs odd n >= 3");
  LiftingReport r{};
  r.n = n;
  r.signature_one = enumerate_triples(n, 1, true).size();
  r.psi_over_24 = lame::class_count_exact(n);
  for (auto m : util::divisors(n)) {
    if (m > 1) r.cumulative_triples += enumerate_triples(m, 1, true).size();
  }
  r.cumulative_expected = lame::lame_count_dividing(n);
  if (brute) {
    if (n > 13) throw DomainError("brute-force classification is limited to n <= 13");
    r.brute_classes = lame::classify_torsion(n, seed).size();
  }
  return r;
}

std::string to_csv(const std::vector<Triple>& ts) {
  std::ostringstream os;
  os << "n,a,b,c,signature,primitive\n";
  for (const auto& t : ts) {
    os << t.degree() << ',' << t.a << ',' << t.b << ',' << t.c << ',' << t.signature() << ',' << (t.primitive() ? 1 : 0)
       << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const Triple& t) {
  return {{"a", t.a}, {"b", t.b}, {"c", t.c}, {"n", t.degree()}, {"signature", t.signature()}, {"primitive", t.primitive()}};
}

nlohmann::json to_json(const LiftingReport& r) {
  nlohmann::json j = {{"n", r.n},
                      {"signature_one", r.signature_one},
                      {"exact_order_classes", r.psi_over_24},
                      {"cumulative_triples", r.cumulative_triples},
                      {"cumulative_expected", r.cumulative_expected},
                      {"holds", r.holds()}};
  if (r.brute_classes) j["brute_classes"] = *r.brute_classes;
  return j;
}

}  // namespace lamekit::triples
