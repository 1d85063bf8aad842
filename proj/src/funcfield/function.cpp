#include "lamekit/funcfield/function.hpp"

#include <algorithm>

#include "lamekit/gf2/embed.hpp"

namespace lamekit::funcfield {

namespace {

Poly h_poly(const WeierstrassCurve& e) { return Poly{e.a3(), e.a1()}; }
Poly f_poly(const WeierstrassCurve& e) { return Poly{e.a6(), e.a4(), e.a2(), e.context().one()}; }

Poly zero_poly(const FieldContext& k) { return Poly(k); }
Poly one_poly(const FieldContext& k) { return Poly::constant(k.one()); }

// dim_k of k[X]^2 / M for the k[X]-module M spanned by `rows`, assumed of full rank.
int colength(std::vector<std::pair<Poly, Poly>> rows) {
  for (;;) {
    auto live = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.first.is_zero(); });
    if (live <= 1) break;
    auto pivot = std::min_element(rows.begin(), rows.end(), [](const auto& l, const auto& r) {
      if (l.first.is_zero() != r.first.is_zero()) return !l.first.is_zero();
      return l.first.degree() < r.first.degree();
    });
    const auto piv = *pivot;
    for (auto& r : rows) {
      if (&r == &*pivot || r.first.is_zero()) continue;
      const Poly q = r.first / piv.first;
      r.first = r.first + q * piv.first;
      r.second = r.second + q * piv.second;
    }
  }
  const FieldContext& k = rows.front().first.context();
  Poly p1 = zero_poly(k), g2 = zero_poly(k);
  for (const auto& r : rows) {
    if (!r.first.is_zero()) {
      p1 = r.first;
    } else {
      g2 = gf2::gcd(g2, r.second);
    }
  }
  if (p1.is_zero() || g2.is_zero()) throw DomainError("module is not of full rank");
  return p1.degree() + g2.degree();
}

Poly embed_poly(const Poly& p, const FieldContext& target) {
  std::vector<u64> w;
  for (int i = 0; i <= p.degree(); ++i) w.push_back(gf2::embed(p.coeff(i), target).bits());
  return Poly(target, std::move(w));
}

}  // namespace

CurveRationalFunction::CurveRationalFunction(const WeierstrassCurve& e, Poly a, Poly b, Poly d)
    : curve_(e), a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  for (const Poly* p : {&a_, &b_, &d_}) {
    if (&p->context() != &e.context()) throw ContextMismatch("function coefficients outside the curve's field");
  }
  if (d_.is_zero()) throw DivisionByZero("zero denominator");
  canonicalize();
}

void CurveRationalFunction::canonicalize() {
  const FieldContext& k = context();
  if (a_.is_zero() && b_.is_zero()) {
    d_ = one_poly(k);
    return;
  }
  const Poly g = gf2::gcd(gf2::gcd(a_, b_), d_);
  if (g.degree() > 0) {
    a_ = a_ / g;
    b_ = b_ / g;
    d_ = d_ / g;
  }
  const FieldElement s = d_.lead().inverse();
  a_ = a_ * s;
  b_ = b_ * s;
  d_ = d_ * s;
}

CurveRationalFunction CurveRationalFunction::constant(const WeierstrassCurve& e, const FieldElement& c) {
  const FieldContext& k = e.context();
  return {e, Poly::constant(c), zero_poly(k), one_poly(k)};
}

CurveRationalFunction CurveRationalFunction::x(const WeierstrassCurve& e) {
  const FieldContext& k = e.context();
  return {e, Poly::x(k), zero_poly(k), one_poly(k)};
}

CurveRationalFunction CurveRationalFunction::y(const WeierstrassCurve& e) {
  const FieldContext& k = e.context();
  return {e, zero_poly(k), one_poly(k), one_poly(k)};
}

CurveRationalFunction CurveRationalFunction::from_poly(const WeierstrassCurve& e, const Poly& p) {
  const FieldContext& k = e.context();
  return {e, p, zero_poly(k), one_poly(k)};
}

bool CurveRationalFunction::is_constant() const { return b_.is_zero() && a_.degree() <= 0 && d_.degree() == 0; }

CurveRationalFunction CurveRationalFunction::operator+(const CurveRationalFunction& o) const {
  if (!(curve_ == o.curve_)) throw DomainError("functions on different curves");
  if (d_ == o.d_) return {curve_, a_ + o.a_, b_ + o.b_, d_};
  return {curve_, a_ * o.d_ + o.a_ * d_, b_ * o.d_ + o.b_ * d_, d_ * o.d_};
}

CurveRationalFunction CurveRationalFunction::operator*(const CurveRationalFunction& o) const {
  if (!(curve_ == o.curve_)) throw DomainError("functions on different curves");
  const Poly bb = b_ * o.b_;
  return {curve_, a_ * o.a_ + bb * f_poly(curve_), a_ * o.b_ + o.a_ * b_ + bb * h_poly(curve_), d_ * o.d_};
}

CurveRationalFunction CurveRationalFunction::operator*(const FieldElement& c) const {
  return {curve_, a_ * c, b_ * c, d_};
}

CurveRationalFunction CurveRationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero function");
  // (A + BY)(A + BH + BY) = N
  const Poly n = numerator_norm();
  return {curve_, d_ * (a_ + b_ * h_poly(curve_)), d_ * b_, n};
}

bool CurveRationalFunction::operator==(const CurveRationalFunction& o) const {
  return curve_ == o.curve_ && a_ == o.a_ && b_ == o.b_ && d_ == o.d_;
}

Poly CurveRationalFunction::numerator_norm() const {
  return a_.square() + a_ * b_ * h_poly(curve_) + b_.square() * f_poly(curve_);
}

int CurveRationalFunction::valuation_at_infinity() const {
  if (is_zero()) throw DomainError("valuation of the zero function");
  // v(A) = -2 deg A and v(BY) = -2 deg B - 3 never tie
  const int num = std::max(a_.is_zero() ? -1000000 : 2 * a_.degree(), b_.is_zero() ? -1000000 : 2 * b_.degree() + 3);
  return 2 * d_.degree() - num;
}

int CurveRationalFunction::degree() const {
  if (is_zero()) throw DomainError("degree of the zero function");
  if (is_constant()) return 0;
  const FieldContext& k = context();
  // Affine poles: div(D) minus its common part with div(A + BY); the common
  // part has degree dim k[E] / (h, D), read off the k[X]-lattice in basis {1, Y}.
  const Poly z = zero_poly(k);
  const int common = colength({{d_, z}, {z, d_}, {a_, b_}, {b_ * f_poly(curve_), a_ + b_ * h_poly(curve_)}});
  return std::max(0, -valuation_at_infinity()) + 2 * d_.degree() - common;
}

std::optional<FieldElement> CurveRationalFunction::value_at_affine(const CurvePoint& p) const {
  if (p.is_infinity()) return std::nullopt;
  const FieldElement den = d_(p.x());
  if (den.is_zero()) return std::nullopt;
  return (a_(p.x()) + b_(p.x()) * p.y()) / den;
}

CurveRationalFunction CurveRationalFunction::embed(const FieldContext& target) const {
  return {curve_.embed(target), embed_poly(a_, target), embed_poly(b_, target), embed_poly(d_, target)};
}

namespace {

// Line through s and t (tangent if equal); vertical when s = -t. Either may be 0_E.
CurveRationalFunction line(const WeierstrassCurve& e, const CurvePoint& s, const CurvePoint& t) {
  const FieldContext& k = e.context();
  const auto X = CurveRationalFunction::x(e), Y = CurveRationalFunction::y(e);
  if (s.is_infinity() && t.is_infinity()) return CurveRationalFunction::constant(e, k.one());
  if (s.is_infinity()) return X + t.x();
  if (t.is_infinity()) return X + s.x();
  if (e.negate(s) == t) return X + s.x();
  FieldElement lambda;
  if (s == t) {
    lambda = (s.x().square() + e.a4() + e.a1() * s.y()) / e.h_at(s.x());
  } else {
    lambda = (s.y() + t.y()) / (s.x() + t.x());
  }
  // Y - y_s - lambda (X - x_s)
  return Y + X * lambda + (s.y() + lambda * s.x());
}

CurveRationalFunction vertical(const WeierstrassCurve& e, const CurvePoint& s) {
  if (s.is_infinity()) return CurveRationalFunction::constant(e, e.context().one());
  return CurveRationalFunction::x(e) + s.x();
}

}  // namespace

CurveRationalFunction miller_function(const WeierstrassCurve& e, const CurvePoint& p, std::uint64_t n) {
  if (p.is_infinity()) throw DomainError("miller_function needs P != 0_E");
  if (n == 0 || !e.multiply(n, p).is_infinity()) throw DomainError("miller_function needs n P = 0_E");
  const FieldContext& k = e.context();
  auto f = CurveRationalFunction::constant(e, k.one());
  CurvePoint t = p;
  int top = 63;
  while (!((n >> top) & 1)) --top;
  for (int bit = top - 1; bit >= 0; --bit) {
    const CurvePoint t2 = e.dbl(t);
    f = f * f * line(e, t, t) / vertical(e, t2);
    t = t2;
    if ((n >> bit) & 1) {
      const CurvePoint tp = e.add(t, p);
      f = f * line(e, t, p) / vertical(e, tp);
      t = tp;
    }
  }
  return f;
}

CurveRationalFunction differentiate(const CurveRationalFunction& f) {
  const WeierstrassCurve& e = f.curve();
  const FieldContext& k = e.context();
  const Poly h = h_poly(e);
  if (h.is_zero()) throw DomainError("a1 X + a3 vanishes identically");
  const Poly z = zero_poly(k), one = one_poly(k);
  const auto dy = CurveRationalFunction(e, Poly{e.a4(), k.zero(), k.one()}, Poly::constant(e.a1()), h);
  const auto num = CurveRationalFunction(e, f.a(), f.b(), one);
  const auto num_prime = CurveRationalFunction(e, f.a().derivative(), f.b().derivative(), one) +
                         CurveRationalFunction(e, f.b(), z, one) * dy;
  const auto den = CurveRationalFunction::from_poly(e, f.d());
  const auto den_prime = CurveRationalFunction::from_poly(e, f.d().derivative());
  return (num_prime * den + num * den_prime) / (den * den);
}

nlohmann::json to_json(const CurveRationalFunction& f) {
  nlohmann::json a, b, d;
  gf2::to_json(a, f.a());
  gf2::to_json(b, f.b());
  gf2::to_json(d, f.d());
  return {{"A", a}, {"B", b}, {"D", d}, {"d", f.context().degree()}};
}

}  // namespace lamekit::funcfield
