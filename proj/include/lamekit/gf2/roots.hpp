#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lamekit/gf2/poly.hpp"

namespace lamekit::gf2 {

struct Factor {
  Poly poly;  // monic
  int multiplicity;
};

/// f (nonzero) as a product of pairwise coprime squarefree g_i^{m_i}; the
/// leading coefficient is dropped.
std::vector<Factor> squarefree_decomposition(const Poly& f);

/// For squarefree monic f: pairs (k, product of all degree-k irreducible factors).
std::vector<std::pair<int, Poly>> distinct_degree_factorization(const Poly& f);

/// Splits a squarefree monic f whose irreducible factors all have degree k
/// using random trace maps Tr_{F_{q^k}/F_2}.
std::vector<Poly> equal_degree_factorization(const Poly& f, int k, std::mt19937_64& rng);

/// Complete factorization into monic irreducibles, sorted by (degree, words).
std::vector<Factor> factor(const Poly& f, std::uint64_t seed = 0);

struct Root {
  FieldElement value;
  int multiplicity;
};

/// Distinct roots in the coefficient field with multiplicities, sorted by bits.
std::vector<Root> roots_with_multiplicity(const Poly& f, std::uint64_t seed = 0);

/// Roots as a multiset (each repeated by multiplicity), sorted by bits.
std::vector<FieldElement> poly_roots(const Poly& f, std::uint64_t seed = 0);

/// A uniformly random element drawn from rng.
FieldElement random_element(const FieldContext& ctx, std::mt19937_64& rng);

}  // namespace lamekit::gf2
