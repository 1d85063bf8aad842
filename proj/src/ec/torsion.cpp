#include "lamekit/ec/torsion.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "lamekit/util/intmath.hpp"

namespace lamekit::ec {

int torsion_field_degree(std::uint64_t n) {
  if (n < 3 || n % 2 == 0) throw DomainError("torsion_field_degree needs odd n > 1");
  // companion matrix of x^2 + 2: [[0, -2], [1, 0]] mod n
  using Mat = std::array<std::uint64_t, 4>;
  const Mat m{0, (n - 2) % n, 1, 0};
  auto mul = [n](const Mat& a, const Mat& b) {
    return Mat{(util::mulmod(a[0], b[0], n) + util::mulmod(a[1], b[2], n)) % n,
               (util::mulmod(a[0], b[1], n) + util::mulmod(a[1], b[3], n)) % n,
               (util::mulmod(a[2], b[0], n) + util::mulmod(a[3], b[2], n)) % n,
               (util::mulmod(a[2], b[1], n) + util::mulmod(a[3], b[3], n)) % n};
  };
  Mat p = m;
  for (int k = 1; k <= 4 * static_cast<int>(n) * static_cast<int>(n); ++k) {
    if (p == Mat{1, 0, 0, 1}) return k;
    p = mul(p, m);
  }
  throw Error("companion matrix order not found");
}

namespace {

// Random point of exact order n inside E(F_q), or infinity on a miss.
CurvePoint sample_exact_order(const WeierstrassCurve& e, std::uint64_t n, std::uint64_t group, std::uint64_t cofactor,
                              std::mt19937_64& rng) {
  const CurvePoint r = e.multiply(cofactor, random_point(e, rng));
  const std::uint64_t primary = group / cofactor;
  const std::uint64_t ord = order_dividing(e, r, primary);
  if (ord % n != 0) return CurvePoint::infinity();
  return e.scalar_mul(static_cast<std::int64_t>(ord / n), r);
}

}  // namespace

TorsionBasis torsion_basis(const WeierstrassCurve& e, std::uint64_t n, std::uint64_t seed) {
  if (!e.is_supersingular_model()) throw DomainError("torsion_basis works on Y^2 + Y = X^3");
  const int need = torsion_field_degree(n);
  if (e.context().degree() % need != 0) {
    throw DomainError("E[" + std::to_string(n) + "] needs a field of degree divisible by " + std::to_string(need));
  }
  const std::uint64_t group = group_order(e);
  const auto primes = util::factor(n);
  // n-primary part of the group order
  std::uint64_t cofactor = group;
  for (auto [p, _] : primes) {
    while (cofactor % p == 0) cofactor /= p;
  }

  std::mt19937_64 rng(seed);
  const std::uint64_t budget = kTorsionTrialsPerN * n;
  std::uint64_t trials = 0;
  CurvePoint p1;
  while (p1.is_infinity()) {
    if (trials++ >= budget) {
      throw SamplingExhausted("torsion_basis(n=" + std::to_string(n) + ", seed=" + std::to_string(seed) +
                              "): no point of exact order n");
    }
    p1 = sample_exact_order(e, n, group, cofactor, rng);
  }
  // Independence prime by prime: (n/p) P2 must avoid the cyclic group <(n/p) P1>.
  auto independent = [&](const CurvePoint& p2) {
    for (auto [p, _] : primes) {
      const auto k = static_cast<std::int64_t>(n / p);
      const CurvePoint a = e.scalar_mul(k, p1), b = e.scalar_mul(k, p2);
      CurvePoint multiple;
      for (std::uint64_t i = 0; i < p; ++i) {
        if (multiple == b) return false;
        multiple = e.add(multiple, a);
      }
    }
    return true;
  };
  for (;;) {
    if (trials++ >= budget) {
      throw SamplingExhausted("torsion_basis(n=" + std::to_string(n) + ", seed=" + std::to_string(seed) +
                              "): no independent second point");
    }
    const CurvePoint p2 = sample_exact_order(e, n, group, cofactor, rng);
    if (!p2.is_infinity() && independent(p2)) return {n, p1, p2};
  }
}

std::vector<CurvePoint> enumerate_torsion(const WeierstrassCurve& e, const TorsionBasis& basis) {
  std::vector<CurvePoint> out;
  out.reserve(basis.n * basis.n);
  CurvePoint row;
  for (std::uint64_t a = 0; a < basis.n; ++a) {
    CurvePoint pt = row;
    for (std::uint64_t b = 0; b < basis.n; ++b) {
      out.push_back(pt);
      pt = e.add(pt, basis.p2);
    }
    row = e.add(row, basis.p1);
  }
  return out;
}

std::vector<CurvePoint> exact_order_subset(const WeierstrassCurve& e, const std::vector<CurvePoint>& points,
                                           std::uint64_t n) {
  std::vector<CurvePoint> out;
  for (const auto& p : points) {
    if (has_exact_order(e, p, n)) out.push_back(p);
  }
  return out;
}

std::uint64_t extension_group_order(const WeierstrassCurve& base, int k) {
  if (k < 1) throw DomainError("extension degree must be positive");
  const int d0 = base.context().degree();
  if (d0 * k > 63) throw DomainError("extension field too large");
  const auto q = static_cast<__int128>(util::pow2(d0));
  const __int128 a = q + 1 - static_cast<__int128>(count_points(base, CountMethod::enumerate));
  // s_k = alpha^k + beta^k with s_0 = 2, s_1 = a, s_k = a s_{k-1} - q s_{k-2}
  __int128 s_prev = 2, s = a, qk = q;
  for (int i = 2; i <= k; ++i) {
    const __int128 next = a * s - q * s_prev;
    s_prev = s;
    s = next;
    qk *= q;
  }
  const __int128 order = qk + 1 - s;
  if (order <= 0 || order > static_cast<__int128>(~std::uint64_t{0})) throw DomainError("group order outside 64 bits");
  return static_cast<std::uint64_t>(order);
}

std::vector<CurvePoint> rational_torsion(const WeierstrassCurve& e, std::uint64_t n, std::uint64_t group_order,
                                         std::uint64_t seed) {
  if (n < 2) throw DomainError("rational_torsion needs n > 1");
  std::uint64_t sylow = 1, cofactor = group_order;
  for (auto [p, _] : util::factor(n)) {
    while (cofactor % p == 0) {
      cofactor /= p;
      sylow *= p;
    }
  }
  if (sylow > kMaxSylowSize) throw DomainError("n-primary part of the group too large");

  auto key = [](const CurvePoint& p) {
    return p.is_infinity() ? std::pair<std::uint64_t, std::uint64_t>{~std::uint64_t{0}, ~std::uint64_t{0}} : std::pair<std::uint64_t, std::uint64_t>{p.x().bits(), p.y().bits()};
  };
  std::vector<CurvePoint> group{CurvePoint::infinity()};
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen{key(CurvePoint::infinity())};
  std::mt19937_64 rng(seed);
  int misses = 0;
  while (group.size() < sylow) {
    // uniform in the Sylow subgroup since the cofactor is prime to it
    const CurvePoint t = e.multiply(cofactor, random_point(e, rng));
    if (seen.count(key(t))) {
      if (++misses >= 64) throw SamplingExhausted("rational_torsion: Sylow subgroup not generated");
      continue;
    }
    misses = 0;
    // <H, t> as the union of cosets H + k t
    const std::vector<CurvePoint> base = group;
    CurvePoint shift = t;
    while (!seen.count(key(shift))) {
      for (const auto& h : base) {
        const CurvePoint x = e.add(h, shift);
        seen.insert(key(x));
        group.push_back(x);
      }
      shift = e.add(shift, t);
    }
  }
  if (group.size() != sylow) throw Error("rational_torsion: subgroup larger than the Sylow part");

  std::vector<CurvePoint> out;
  for (const auto& p : group) {
    if (e.multiply(n, p).is_infinity()) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [&](const CurvePoint& a, const CurvePoint& b) { return serialized_less(e, a, b); });
  return out;
}

int ordinary_torsion_field_degree(const WeierstrassCurve& e, std::uint64_t n, int max_degree, std::uint64_t seed) {
  const int d0 = e.context().degree();
  for (int k = 1; k * d0 <= max_degree; ++k) {
    const std::uint64_t order = extension_group_order(e, k);
    if (order % n != 0) continue;
    // A point of exact order n exists iff the n-primary part has exponent >= n;
    // decide it on the actual group.
    const WeierstrassCurve ek = e.embed(FieldContext::of(k * d0));
    if (!exact_order_subset(ek, rational_torsion(ek, n, order, seed), n).empty()) return k * d0;
  }
  return 0;
}

}  // namespace lamekit::ec
