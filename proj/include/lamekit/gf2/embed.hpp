#pragma once

#include <optional>

#include "lamekit/gf2/field.hpp"

namespace lamekit::gf2 {

/// Image of a under the fixed embedding F_{2^e} -> F_{2^d} (e | d).
///
/// Embeddings are chosen lazily but canonically: the image of the generator
/// of F_{2^e} is the numerically smallest root of the degree-e modulus in the
/// target that is compatible with the already fixed embeddings of every
/// maximal proper subfield. The resulting system commutes:
/// embed(embed(a, mid), top) == embed(a, top).
FieldElement embed(const FieldElement& a, const FieldContext& target);

/// Inverse of embed: the preimage of a in the subfield `target`, if a lies in it.
std::optional<FieldElement> descend(const FieldElement& a, const FieldContext& target);

/// a written in its smallest subfield F_{2^e}, e = element_degree(a).
FieldElement minimal_field_representative(const FieldElement& a);

}  // namespace lamekit::gf2
