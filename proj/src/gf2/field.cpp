#include "lamekit/gf2/field.hpp"

#include <immintrin.h>

#include <bit>
#include <memory>
#include <mutex>

namespace lamekit::gf2 {

namespace {

using u128 = unsigned __int128;

int bit_degree(u64 a) { return a == 0 ? -1 : 63 - std::countl_zero(a); }
int bit_degree128(u128 a) {
  const u64 hi = static_cast<u64>(a >> 64);
  return hi ? 64 + bit_degree(hi) : bit_degree(static_cast<u64>(a));
}

u128 clmul_soft(u64 a, u64 b) {
  u128 table[16];
  table[0] = 0;
  table[1] = a;
  for (int i = 2; i < 16; i += 2) {
    table[i] = table[i / 2] << 1;
    table[i + 1] = table[i] ^ a;
  }
  u128 r = 0;
  for (int shift = 60; shift >= 0; shift -= 4) r = (r << 4) ^ table[(b >> shift) & 0xf];
  return r;
}

__attribute__((target("pclmul,sse2"))) u128 clmul_hw(u64 a, u64 b) {
  const __m128i r = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                         _mm_cvtsi64_si128(static_cast<long long>(b)), 0);
  const u64 lo = static_cast<u64>(_mm_cvtsi128_si64(r));
  const u64 hi = static_cast<u64>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(r, r)));
  return (u128(hi) << 64) | lo;
}

const bool kHardwareClmul = __builtin_cpu_supports("pclmul");

inline u128 clmul(u64 a, u64 b) { return kHardwareClmul ? clmul_hw(a, b) : clmul_soft(a, b); }

// Bit-polynomial arithmetic modulo an arbitrary (not yet known irreducible) m.
u64 polymulmod(u64 a, u64 b, u64 m) {
  const int d = bit_degree(m);
  u128 p = clmul(a, b);
  for (int k = bit_degree128(p); k >= d; --k) {
    if ((p >> k) & 1) p ^= u128(m) << (k - d);
  }
  return static_cast<u64>(p);
}

u64 polygcd(u64 a, u64 b) {
  while (b) {
    const int db = bit_degree(b);
    for (int k = bit_degree(a); k >= db && a; k = bit_degree(a)) a ^= b << (k - db);
    std::swap(a, b);
  }
  return a;
}

std::mutex registry_mutex;
std::unique_ptr<FieldContext> registry[kMaxDegree + 1];

}  // namespace

bool is_irreducible(u64 poly) {
  const int d = bit_degree(poly);
  if (d < 1) return false;
  if (d == 1) return true;
  // x^(2^k) mod poly for k = 0..d
  std::vector<u64> frob(d + 1);
  frob[0] = 2 % poly;
  if (bit_degree(frob[0]) >= d) frob[0] ^= poly;
  for (int k = 1; k <= d; ++k) frob[k] = polymulmod(frob[k - 1], frob[k - 1], poly);
  if (frob[d] != frob[0]) return false;
  for (int p = 2; p <= d; ++p) {
    bool prime = true;
    for (int q = 2; q * q <= p; ++q) prime = prime && (p % q != 0);
    if (!prime || d % p != 0) continue;
    if (polygcd(poly, frob[d / p] ^ frob[0]) != 1) return false;
  }
  return true;
}

u64 smallest_irreducible(int degree) {
  if (degree < 1 || degree > kMaxDegree) throw DomainError("field degree out of range");
  const u64 lead = u64{1} << degree;
  for (u64 tail = 0; tail < lead; ++tail) {
    if (is_irreducible(lead | tail)) return lead | tail;
  }
  throw Error("no irreducible polynomial found");
}

FieldContext::FieldContext(int degree)
    : degree_(degree),
      modulus_(smallest_irreducible(degree)),
      tail_(modulus_ ^ (u64{1} << degree)),
      mask_((u64{1} << degree) - 1) {
  // Trace mask: bit i set iff Tr(x^i) = 1.
  trace_mask_ = 0;
  for (int i = 0; i < degree_; ++i) {
    u64 v = u64{1} << i;
    v = reduce(v, 0);
    u64 acc = 0, cur = v;
    for (int k = 0; k < degree_; ++k) {
      acc ^= cur;
      cur = sqr(cur);
    }
    if (acc & 1) trace_mask_ |= u64{1} << i;
  }
  for (int i = 0; i < degree_; ++i) sqrt_cols_[i] = frobenius(reduce(u64{1} << i, 0), degree_ - 1);

  if (degree_ % 2 == 0) {
    // Echelon basis of the image of y -> y^2 + y, extended by a trace-one
    // vector whose preimage is declared zero. Reducing a unit vector then
    // yields a linear section of the map on the trace-zero hyperplane.
    struct Row {
      u64 vec, pre;
    };
    std::array<std::optional<Row>, 64> rows{};
    auto insert = [&](u64 vec, u64 pre) {
      for (int k = degree_ - 1; k >= 0 && vec; --k) {
        if (!((vec >> k) & 1)) continue;
        if (!rows[k]) {
          rows[k] = Row{vec, pre};
          return;
        }
        vec ^= rows[k]->vec;
        pre ^= rows[k]->pre;
      }
    };
    for (int i = 0; i < degree_; ++i) {
      const u64 e = u64{1} << i;
      insert(sqr(e) ^ e, e);
    }
    for (int i = 0; i < degree_; ++i) {
      if ((trace_mask_ >> i) & 1) {
        insert(u64{1} << i, 0);
        break;
      }
    }
    for (int i = 0; i < degree_; ++i) {
      u64 vec = u64{1} << i, pre = 0;
      for (int k = degree_ - 1; k >= 0; --k) {
        if ((vec >> k) & 1) {
          vec ^= rows[k]->vec;
          pre ^= rows[k]->pre;
        }
      }
      as_cols_[i] = pre;
    }
  }
}

const FieldContext& FieldContext::of(int degree) {
  if (degree < 1 || degree > kMaxDegree) throw DomainError("field degree out of range: " + std::to_string(degree));
  std::lock_guard lock(registry_mutex);
  auto& slot = registry[degree];
  if (!slot) slot.reset(new FieldContext(degree));
  return *slot;
}

u64 FieldContext::reduce(u64 lo, u64 hi) const {
  u128 p = (u128(hi) << 64) | lo;
  while (p >> degree_) {
    const u64 q = static_cast<u64>(p >> degree_);
    p = (p & mask_) ^ clmul(q, tail_);
  }
  return static_cast<u64>(p);
}

u64 FieldContext::mul(u64 a, u64 b) const {
  const u128 p = clmul(a, b);
  return reduce(static_cast<u64>(p), static_cast<u64>(p >> 64));
}

u64 FieldContext::inv(u64 a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in F_2^" + std::to_string(degree_));
  u64 u = a, v = modulus_;
  u128 g1 = 1, g2 = 0;
  while (u != 1) {
    int j = bit_degree(u) - bit_degree(v);
    if (j < 0) {
      std::swap(u, v);
      std::swap(g1, g2);
      j = -j;
    }
    u ^= v << j;
    g1 ^= g2 << j;
  }
  return reduce(static_cast<u64>(g1), static_cast<u64>(g1 >> 64));
}

u64 FieldContext::pow(u64 a, u64 e) const {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = sqr(a);
    e >>= 1;
  }
  return r;
}

int FieldContext::trace(u64 a) const { return std::popcount(a & trace_mask_) & 1; }

u64 FieldContext::apply_linear(const std::array<u64, 64>& cols, u64 a) const {
  u64 r = 0;
  while (a) {
    r ^= cols[std::countr_zero(a)];
    a &= a - 1;
  }
  return r;
}

u64 FieldContext::sqrt(u64 a) const { return apply_linear(sqrt_cols_, a); }

std::optional<u64> FieldContext::artin_schreier(u64 c) const {
  if (trace(c)) return std::nullopt;
  if (degree_ % 2 == 1) {
    // half-trace: c + c^4 + c^16 + ...
    u64 h = 0, cur = c;
    for (int i = 0; i <= (degree_ - 1) / 2; ++i) {
      h ^= cur;
      cur = sqr(sqr(cur));
    }
    return h;
  }
  return apply_linear(as_cols_, c);
}

u64 FieldContext::frobenius(u64 a, int k) const {
  k %= degree_;
  for (int i = 0; i < k; ++i) a = sqr(a);
  return a;
}

FieldElement FieldContext::zero() const { return FieldElement(*this, 0); }
FieldElement FieldContext::one() const { return FieldElement(*this, 1); }
FieldElement FieldContext::element(u64 bits) const { return FieldElement(*this, bits); }
FieldElement FieldContext::generator() const { return FieldElement(*this, reduce(2, 0)); }

FieldElement::FieldElement(const FieldContext& ctx, u64 bits) : ctx_(&ctx), bits_(bits) {
  if (ctx.degree() < 64 && (bits >> ctx.degree()) != 0) throw DomainError("field element not reduced");
}

const FieldContext& FieldElement::context() const {
  if (!ctx_) throw DomainError("unbound field element");
  return *ctx_;
}

namespace {
const FieldContext& common(const FieldElement& a, const FieldElement& b) {
  const FieldContext& ca = a.context();
  if (&ca != &b.context()) {
    throw ContextMismatch("field elements from F_2^" + std::to_string(ca.degree()) + " and F_2^" +
                          std::to_string(b.context().degree()));
  }
  return ca;
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return FieldElement(common(*this, o), bits_ ^ o.bits_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  const FieldContext& c = common(*this, o);
  return FieldElement(c, c.mul(bits_, o.bits_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  const FieldContext& c = common(*this, o);
  return FieldElement(c, c.mul(bits_, c.inv(o.bits_)));
}

FieldElement FieldElement::square() const { return FieldElement(context(), ctx_->sqr(bits_)); }
FieldElement FieldElement::inverse() const { return FieldElement(context(), ctx_->inv(bits_)); }
FieldElement FieldElement::pow(u64 e) const { return FieldElement(context(), ctx_->pow(bits_, e)); }
FieldElement FieldElement::sqrt() const { return FieldElement(context(), ctx_->sqrt(bits_)); }
FieldElement FieldElement::frobenius(int k) const { return FieldElement(context(), ctx_->frobenius(bits_, k)); }

std::string FieldElement::hex() const {
  static const char* digits = "0123456789abcdef";
  if (bits_ == 0) return "0";
  std::string s;
  for (u64 v = bits_; v; v >>= 4) s.insert(s.begin(), digits[v & 0xf]);
  return s;
}

int trace(const FieldElement& a) { return a.context().trace(a.bits()); }

std::vector<FieldElement> solve_artin_schreier(const FieldElement& c) {
  const FieldContext& ctx = c.context();
  const auto y = ctx.artin_schreier(c.bits());
  if (!y) return {};
  u64 lo = *y, hi = *y ^ 1;
  if (hi < lo) std::swap(lo, hi);
  return {ctx.element(lo), ctx.element(hi)};
}

int element_degree(const FieldElement& a) {
  const FieldContext& ctx = a.context();
  u64 cur = a.bits();
  for (int e = 1; e <= ctx.degree(); ++e) {
    cur = ctx.sqr(cur);
    if (cur == a.bits()) return e;
  }
  return ctx.degree();
}

void to_json(nlohmann::json& j, const FieldElement& a) {
  j = nlohmann::json{{"d", a.context().degree()}, {"hex", a.hex()}};
}

FieldElement field_element_from_json(const nlohmann::json& j) {
  const auto& ctx = FieldContext::of(j.at("d").get<int>());
  const std::string hex = j.at("hex").get<std::string>();
  if (hex.empty() || hex.size() > 16) throw DomainError("bad field element hex: " + hex);
  return ctx.element(std::stoull(hex, nullptr, 16));
}

}  // namespace lamekit::gf2
