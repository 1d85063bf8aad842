#include "lamekit/funcfield/series.hpp"

#include <algorithm>

#include "lamekit/util/error.hpp"

namespace lamekit::funcfield {

namespace {

int clamp_prec(long long p) { return p >= LaurentSeries::kExact / 2 ? LaurentSeries::kExact : static_cast<int>(p); }

void same_field(const FieldContext& a, const FieldContext& b) {
  if (&a != &b) throw ContextMismatch("series over different fields");
}

}  // namespace

LaurentSeries::LaurentSeries(const FieldContext& ctx) : ctx_(&ctx) {}

LaurentSeries::LaurentSeries(const FieldContext& ctx, int start, std::vector<u64> coeffs, int prec)
    : ctx_(&ctx), start_(start), c_(std::move(coeffs)), prec_(clamp_prec(prec)) {
  normalize();
}

LaurentSeries LaurentSeries::constant(const FieldElement& c) { return {c.context(), 0, {c.bits()}, kExact}; }

LaurentSeries LaurentSeries::t(const FieldContext& ctx) { return {ctx, 1, {1}, kExact}; }

LaurentSeries LaurentSeries::from_poly(const gf2::Poly& p) { return {p.context(), 0, p.words(), kExact}; }

void LaurentSeries::normalize() {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    if (!is_exact()) start_ = prec_;
    return;
  }
  c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
  start_ += static_cast<int>(lead);
  if (!is_exact()) {
    if (start_ >= prec_) {
      c_.clear();
      start_ = prec_;
      return;
    }
    if (static_cast<int>(c_.size()) > prec_ - start_) c_.resize(static_cast<std::size_t>(prec_ - start_));
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int LaurentSeries::valuation() const {
  if (c_.empty()) {
    if (is_exact()) throw DomainError("valuation of the zero series");
    throw PrecisionExhausted("series is zero modulo t^" + std::to_string(prec_));
  }
  return start_;
}

FieldElement LaurentSeries::coeff(int k) const {
  if (k >= prec_) throw PrecisionExhausted("coefficient of t^" + std::to_string(k) + " beyond precision");
  const int i = k - start_;
  return ctx_->element(i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : 0);
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  same_field(*ctx_, *o.ctx_);
  if (is_exact_zero()) return o;
  if (o.is_exact_zero()) return *this;
  const int prec = std::min(prec_, o.prec_);
  const int start = std::min(valuation_bound(), o.valuation_bound());
  if (start >= prec) return {*ctx_, prec, {}, prec};
  long long top = 0;
  if (prec >= kExact) {
    top = std::max<long long>(start_ + static_cast<long long>(c_.size()), o.start_ + static_cast<long long>(o.c_.size()));
  } else {
    top = prec;
  }
  std::vector<u64> r(static_cast<std::size_t>(std::max<long long>(0, top - start)), 0);
  auto accumulate = [&](const LaurentSeries& s) {
    for (std::size_t i = 0; i < s.c_.size(); ++i) {
      const long long k = s.start_ + static_cast<long long>(i) - start;
      if (k < static_cast<long long>(r.size())) r[static_cast<std::size_t>(k)] ^= s.c_[i];
    }
  };
  accumulate(*this);
  accumulate(o);
  return {*ctx_, start, std::move(r), prec};
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  same_field(*ctx_, *o.ctx_);
  if (is_exact_zero() || o.is_exact_zero()) return LaurentSeries(*ctx_);
  const long long va = valuation_bound(), vb = o.valuation_bound();
  const int prec = clamp_prec(std::min(static_cast<long long>(prec_) + vb, static_cast<long long>(o.prec_) + va));
  const long long start = va + vb;
  if (c_.empty() || o.c_.empty()) return {*ctx_, prec, {}, prec};
  std::size_t len = c_.size() + o.c_.size() - 1;
  if (prec < kExact) len = std::min<std::size_t>(len, static_cast<std::size_t>(std::max<long long>(0, prec - start)));
  std::vector<u64> r(len, 0);
  for (std::size_t i = 0; i < c_.size() && i < len; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size() && i + j < len; ++j) r[i + j] ^= ctx_->mul(c_[i], o.c_[j]);
  }
  return {*ctx_, static_cast<int>(start), std::move(r), prec};
}

LaurentSeries LaurentSeries::operator*(const FieldElement& s) const { return *this * constant(s); }

LaurentSeries LaurentSeries::inverse(int max_rel) const {
  if (is_exact_zero()) throw DivisionByZero("inverse of the zero series");
  const int v = valuation();
  int rel = is_exact() ? (c_.size() == 1 ? 1 : max_rel) : prec_ - v;
  std::vector<u64> b(static_cast<std::size_t>(rel), 0);
  const u64 inv0 = ctx_->inv(c_[0]);
  b[0] = inv0;
  for (int k = 1; k < rel; ++k) {
    u64 acc = 0;
    for (int i = 1; i <= k && i < static_cast<int>(c_.size()); ++i) acc ^= ctx_->mul(c_[i], b[k - i]);
    b[k] = ctx_->mul(inv0, acc);
  }
  const int prec = is_exact() && c_.size() == 1 ? kExact : rel - v;
  return {*ctx_, -v, std::move(b), prec};
}

LaurentSeries LaurentSeries::derivative() const {
  std::vector<u64> r(c_.size(), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const int k = start_ + static_cast<int>(i);
    if (k & 1) r[i] = c_[i];
  }
  // shift down by one
  return {*ctx_, start_ - 1, std::move(r), is_exact() ? kExact : prec_ - 1};
}

LaurentSeries LaurentSeries::truncated(int prec) const {
  return {*ctx_, start_, c_, std::min(prec, prec_)};
}

LaurentSeries LaurentSeries::compose(const gf2::Poly& p) const {
  same_field(*ctx_, p.context());
  LaurentSeries acc(*ctx_);
  for (int i = p.degree(); i >= 0; --i) acc = acc * *this + constant(p.coeff(i));
  return acc;
}

bool LaurentSeries::same_as(const LaurentSeries& o) const {
  return ctx_ == o.ctx_ && prec_ == o.prec_ && c_ == o.c_ && (c_.empty() || start_ == o.start_);
}

}  // namespace lamekit::funcfield
