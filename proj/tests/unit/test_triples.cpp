#include <doctest.h>

#include <set>

#include "lamekit/lame/counting.hpp"
#include "lamekit/triples/triples.hpp"
#include "lamekit/util/error.hpp"

using namespace lamekit;
using namespace lamekit::triples;

namespace {

// Rotation classes by brute force: collect canonical forms of every composition.
std::uint64_t brute_classes(std::uint64_t n) {
  std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> seen;
  for (std::uint64_t a = 1; a < n; ++a) {
    for (std::uint64_t b = 1; a + b < n; ++b) {
      const std::uint64_t c = n - a - b;
      seen.insert(std::min({std::tuple(a, b, c), std::tuple(c, a, b), std::tuple(b, c, a)}));
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("degree 9 triples") {
  const auto all = enumerate_triples(9);
  const std::vector<Triple> expected{{1, 1, 7}, {1, 2, 6}, {1, 3, 5}, {1, 4, 4}, {1, 5, 3},
                                     {1, 6, 2}, {2, 2, 5}, {2, 3, 4}, {2, 4, 3}};
  CHECK(all == expected);
  const auto sig1 = enumerate_triples(9, 1);
  CHECK(sig1.size() == 3);
  for (const auto& t : sig1) CHECK((t.a % 2 == 1 && t.b % 2 == 1 && t.c % 2 == 1));
  // (3,3,3) is the only imprimitive one
  CHECK(enumerate_triples(9, std::nullopt, false).size() == 10);
}

TEST_CASE("degree 5 triples") {
  const std::vector<Triple> expected{{1, 1, 3}, {1, 2, 2}};
  CHECK(enumerate_triples(5) == expected);
  CHECK_THROWS_AS(enumerate_triples(8), DomainError);
  CHECK_THROWS_AS(enumerate_triples(2), DomainError);
}

TEST_CASE("canonical form") {
  for (std::uint64_t a = 1; a < 8; ++a) {
    for (std::uint64_t b = 1; b < 8; ++b) {
      for (std::uint64_t c = 1; c < 8; ++c) {
        const Triple t{a, b, c};
        const Triple k = canonicalize(t);
        CHECK(canonicalize(k) == k);
        CHECK(canonicalize(Triple{c, a, b}) == k);
        CHECK(canonicalize(Triple{b, c, a}) == k);
        CHECK(Triple{c, a, b}.signature() == t.signature());
      }
    }
  }
}

TEST_CASE("Burnside count") {
  for (std::uint64_t n = 3; n <= 200; ++n) {
    const auto b = burnside_class_count(n);
    CHECK(b == brute_classes(n));
    if (n % 2 == 1) CHECK(enumerate_triples(n, std::nullopt, false).size() == b);
  }
}

TEST_CASE("lifting counts") {
  const auto r9 = lifting_count_check(9, true);
  CHECK(r9.signature_one == 3);
  CHECK(r9.psi_over_24 == 3);
  CHECK(r9.cumulative_triples == 4);
  CHECK(r9.cumulative_expected == 4);
  CHECK(r9.holds());
  CHECK(lifting_count_check(5).signature_one == 1);
  CHECK(lifting_count_check(7).signature_one == 2);
  for (std::uint64_t n = 3; n <= 13; n += 2) CHECK(lifting_count_check(n, true).holds());
  for (std::uint64_t n = 5; n <= 99; n += 2) {
    CHECK(enumerate_triples(n, 1).size() == lame::psi(n) / 24);
    CHECK(lifting_count_check(n).holds());
  }
  CHECK(lifting_count_check(3).signature_one == 1);
}

TEST_CASE("csv") {
  CHECK(to_csv(enumerate_triples(5)) == "n,a,b,c,signature,primitive\n5,1,1,3,1,1\n5,1,2,2,0,1\n");
}
