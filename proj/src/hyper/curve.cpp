#include <algorithm>
#include <limits>

#include "lamekit/gf2/roots.hpp"
#include "lamekit/hyper/hyper.hpp"
#include "lamekit/util/error.hpp"

namespace lamekit::hyper {

const FieldElement& HyperPoint::x() const {
  if (inf_) throw DomainError("point at infinity has no x");
  return x_;
}

const FieldElement& HyperPoint::y() const {
  if (inf_) throw DomainError("point at infinity has no y");
  return y_;
}

HyperellipticCurve::HyperellipticCurve(int genus, const FieldContext& ctx) : g_(genus), ctx_(&ctx) {
  if (genus < 1) throw DomainError("genus must be at least 1");
}

Poly HyperellipticCurve::f() const { return Poly::monomial(ctx_->one(), 2 * g_ + 1); }

bool HyperellipticCurve::contains(const HyperPoint& p) const {
  if (p.is_infinity()) return true;
  if (&p.x().context() != ctx_) return false;
  return p.y().square() + p.y() == p.x().pow(static_cast<std::uint64_t>(2 * g_ + 1));
}

HyperPoint HyperellipticCurve::involution(const HyperPoint& p) const {
  if (p.is_infinity()) return p;
  return {p.x(), p.y() + ctx_->one()};
}

std::uint64_t HyperellipticCurve::count_points(kernels::Exec exec) const {
  return kernels::hyper_affine_count(g_, *ctx_, exec) + 1;
}

std::vector<HyperPoint> HyperellipticCurve::enumerate_points() const {
  if (ctx_->degree() > 16) throw DomainError("field too large to enumerate");
  std::vector<HyperPoint> out{HyperPoint{}};
  const auto e = static_cast<std::uint64_t>(2 * g_ + 1);
  for (std::uint64_t xb = 0; xb < ctx_->size(); ++xb) {
    const auto x = ctx_->element(xb);
    auto ys = gf2::solve_artin_schreier(x.pow(e));
    std::sort(ys.begin(), ys.end(), gf2::bits_less);
    for (const auto& y : ys) out.emplace_back(x, y);
  }
  return out;
}

HyperPoint HyperellipticCurve::random_affine_point(std::mt19937_64& rng) const {
  const auto e = static_cast<std::uint64_t>(2 * g_ + 1);
  // half of all x lift, so this budget only fails with probability 2^-256
  for (int trial = 0; trial < 256; ++trial) {
    const auto x = gf2::random_element(*ctx_, rng);
    const auto ys = gf2::solve_artin_schreier(x.pow(e));
    if (!ys.empty()) return {x, ys[rng() % ys.size()]};
  }
  throw SamplingExhausted("no affine point found");
}

LPolynomial HyperellipticCurve::lpoly() const { return lpoly_by_counting(g_, 1).base_change(ctx_->degree()); }

std::uint64_t HyperellipticCurve::jacobian_order() const {
  const Integer n = lpoly().at_one();
  if (n <= 0 || n > Integer(std::numeric_limits<std::uint64_t>::max()))
    throw DomainError("Jacobian order outside 64-bit range");
  return n.convert_to<std::uint64_t>();
}

void to_json(nlohmann::json& j, const HyperPoint& p) {
  if (p.is_infinity()) {
    j = {{"infinity", true}};
  } else {
    j = {{"x", p.x().hex()}, {"y", p.y().hex()}};
  }
}

}  // namespace lamekit::hyper
