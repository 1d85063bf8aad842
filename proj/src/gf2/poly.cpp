#include "lamekit/gf2/poly.hpp"

namespace lamekit::gf2 {

Poly::Poly(const FieldContext& ctx, std::vector<u64> coeffs) : ctx_(&ctx), c_(std::move(coeffs)) {
  for (u64 w : c_) {
    if (ctx.degree() < 64 && (w >> ctx.degree())) throw DomainError("polynomial coefficient not reduced");
  }
  trim();
}

Poly::Poly(std::initializer_list<FieldElement> coeffs) {
  if (coeffs.size() == 0) throw DomainError("empty coefficient list needs a context");
  ctx_ = &coeffs.begin()->context();
  for (const auto& c : coeffs) {
    if (&c.context() != ctx_) throw ContextMismatch("polynomial coefficients from different fields");
    c_.push_back(c.bits());
  }
  trim();
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.context(), {c.bits()}); }

Poly Poly::x(const FieldContext& ctx) { return Poly(ctx, {0, 1}); }

Poly Poly::monomial(const FieldElement& c, int k) {
  std::vector<u64> w(k + 1, 0);
  w[k] = c.bits();
  return Poly(c.context(), std::move(w));
}

const FieldContext& Poly::context() const {
  if (!ctx_) throw DomainError("unbound polynomial");
  return *ctx_;
}

FieldElement Poly::coeff(int i) const {
  return context().element(i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0);
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const FieldContext& Poly::ctx_for(const Poly& o) const {
  if (ctx_ != o.ctx_) {
    if (!ctx_ || !o.ctx_) throw DomainError("unbound polynomial");
    throw ContextMismatch("polynomials over different fields");
  }
  return *ctx_;
}

Poly Poly::operator+(const Poly& o) const {
  const FieldContext& ctx = ctx_for(o);
  std::vector<u64> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] ^= o.c_[i];
  return Poly(ctx, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  const FieldContext& ctx = ctx_for(o);
  if (c_.empty() || o.c_.empty()) return Poly(ctx);
  std::vector<u64> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] ^= ctx.mul(c_[i], o.c_[j]);
  }
  return Poly(ctx, std::move(r));
}

Poly Poly::operator*(const FieldElement& s) const {
  const FieldContext& ctx = context();
  if (&s.context() != &ctx) throw ContextMismatch("scalar from a different field");
  std::vector<u64> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = ctx.mul(c_[i], s.bits());
  return Poly(ctx, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  const FieldContext& ctx = ctx_for(d);
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (degree() < d.degree()) return {Poly(ctx), *this};
  std::vector<u64> rem = c_;
  std::vector<u64> quo(c_.size() - d.c_.size() + 1, 0);
  const u64 lead_inv = ctx.inv(d.c_.back());
  const int dd = d.degree();
  for (int k = degree(); k >= dd; --k) {
    if (!rem[k]) continue;
    const u64 q = ctx.mul(rem[k], lead_inv);
    quo[k - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] ^= ctx.mul(q, d.c_[j]);
  }
  rem.resize(dd);
  return {Poly(ctx, std::move(quo)), Poly(ctx, std::move(rem))};
}

FieldElement Poly::operator()(const FieldElement& x) const {
  const FieldContext& ctx = context();
  if (&x.context() != &ctx) throw ContextMismatch("evaluation point from a different field");
  u64 acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = ctx.mul(acc, x.bits()) ^ *it;
  return ctx.element(acc);
}

Poly Poly::derivative() const {
  std::vector<u64> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back((i & 1) ? c_[i] : 0);
  return Poly(context(), std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inverse();
}

Poly Poly::square() const {
  const FieldContext& ctx = context();
  std::vector<u64> r(c_.empty() ? 0 : 2 * c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[2 * i] = ctx.sqr(c_[i]);
  return Poly(ctx, std::move(r));
}

Poly Poly::sqrt_of_square() const {
  const FieldContext& ctx = context();
  std::vector<u64> r;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i & 1) {
      if (c_[i]) throw DomainError("sqrt_of_square: odd-degree term present");
    } else {
      r.push_back(ctx.sqrt(c_[i]));
    }
  }
  return Poly(ctx, std::move(r));
}

Poly Poly::frobenius_coeffs(int k) const {
  const FieldContext& ctx = context();
  std::vector<u64> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = ctx.frobenius(c_[i], k);
  return Poly(ctx, std::move(r));
}

Poly Poly::powmod(std::uint64_t e, const Poly& m) const {
  Poly base = *this % m;
  Poly r = Poly::constant(context().one()) % m;
  while (e) {
    if (e & 1) r = (r * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return r;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

XGcd xgcd(const Poly& a, const Poly& b) {
  const FieldContext& ctx = a.context();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(ctx.one()), s1(ctx);
  Poly t0(ctx), t1 = Poly::constant(ctx.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 + q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 + q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const FieldElement inv = r0.lead().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

void to_json(nlohmann::json& j, const Poly& p) {
  j = nlohmann::json::array();
  for (int i = 0; i <= p.degree(); ++i) j.push_back(p.coeff(i).hex());
}

}  // namespace lamekit::gf2
