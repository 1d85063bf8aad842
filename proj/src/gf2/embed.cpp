#include "lamekit/gf2/embed.hpp"

#include <array>
#include <map>
#include <mutex>

#include "lamekit/gf2/poly.hpp"
#include "lamekit/gf2/roots.hpp"

namespace lamekit::gf2 {

namespace {

// Column i is the image of x^i.
struct LinearEmbedding {
  std::array<u64, 64> cols{};
  int source_degree = 0;

  u64 apply(u64 a) const {
    u64 r = 0;
    for (int i = 0; i < source_degree; ++i) {
      if ((a >> i) & 1) r ^= cols[i];
    }
    return r;
  }
};

std::recursive_mutex cache_mutex;
std::map<std::pair<int, int>, LinearEmbedding> cache;

LinearEmbedding from_root(const FieldContext& src, const FieldContext& dst, u64 root) {
  LinearEmbedding m;
  m.source_degree = src.degree();
  u64 p = 1;
  for (int i = 0; i < src.degree(); ++i) {
    m.cols[i] = p;
    p = dst.mul(p, root);
  }
  return m;
}

const LinearEmbedding& embedding_locked(int e, int d) {
  auto it = cache.find({e, d});
  if (it != cache.end()) return it->second;
  const FieldContext& src = FieldContext::of(e);
  const FieldContext& dst = FieldContext::of(d);
  if (e == d) {
    LinearEmbedding id;
    id.source_degree = e;
    for (int i = 0; i < e; ++i) id.cols[i] = u64{1} << i;
    return cache.emplace(std::make_pair(e, d), id).first->second;
  }
  // modulus of F_{2^e} as a polynomial over F_{2^d}
  std::vector<u64> coeffs(e + 1);
  for (int i = 0; i <= e; ++i) coeffs[i] = (src.modulus() >> i) & 1;
  const auto candidates = roots_with_multiplicity(Poly(dst, coeffs));

  std::vector<int> maximal_subfields;
  for (int p = 2; p <= e; ++p) {
    bool prime = true;
    for (int q = 2; q * q <= p; ++q) prime = prime && (p % q != 0);
    if (prime && e % p == 0) maximal_subfields.push_back(e / p);
  }

  for (const auto& cand : candidates) {
    LinearEmbedding m = from_root(src, dst, cand.value.bits());
    bool ok = true;
    for (int k : maximal_subfields) {
      const FieldContext& sub = FieldContext::of(k);
      const u64 gen = sub.generator().bits();
      const u64 via_mid = m.apply(embedding_locked(k, e).apply(gen));
      const u64 direct = embedding_locked(k, d).apply(gen);
      if (via_mid != direct) {
        ok = false;
        break;
      }
    }
    if (ok) return cache.emplace(std::make_pair(e, d), m).first->second;
  }
  throw Error("no compatible embedding F_2^" + std::to_string(e) + " -> F_2^" + std::to_string(d));
}

LinearEmbedding embedding(int e, int d) {
  if (d % e != 0) {
    throw DomainError("cannot embed F_2^" + std::to_string(e) + " into F_2^" + std::to_string(d));
  }
  std::lock_guard lock(cache_mutex);
  return embedding_locked(e, d);
}

}  // namespace

FieldElement embed(const FieldElement& a, const FieldContext& target) {
  const FieldContext& src = a.context();
  if (&src == &target) return a;
  return target.element(embedding(src.degree(), target.degree()).apply(a.bits()));
}

std::optional<FieldElement> descend(const FieldElement& a, const FieldContext& target) {
  const FieldContext& src = a.context();
  if (&src == &target) return a;
  const LinearEmbedding m = embedding(target.degree(), src.degree());
  // Gaussian elimination on the columns, tracking which source bits combine.
  struct Row {
    u64 vec, pre;
  };
  std::array<std::optional<Row>, 64> rows{};
  for (int i = 0; i < m.source_degree; ++i) {
    u64 vec = m.cols[i], pre = u64{1} << i;
    for (int k = 63; k >= 0 && vec; --k) {
      if (!((vec >> k) & 1)) continue;
      if (!rows[k]) {
        rows[k] = Row{vec, pre};
        break;
      }
      vec ^= rows[k]->vec;
      pre ^= rows[k]->pre;
    }
  }
  u64 vec = a.bits(), pre = 0;
  for (int k = 63; k >= 0 && vec; --k) {
    if (!((vec >> k) & 1)) continue;
    if (!rows[k]) return std::nullopt;
    vec ^= rows[k]->vec;
    pre ^= rows[k]->pre;
  }
  return target.element(pre);
}

FieldElement minimal_field_representative(const FieldElement& a) {
  return *descend(a, FieldContext::of(element_degree(a)));
}

}  // namespace lamekit::gf2
