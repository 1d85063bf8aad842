#include <algorithm>
#include <limits>

#include "lamekit/hyper/hyper.hpp"
#include "lamekit/util/error.hpp"

namespace lamekit::hyper {

namespace {

Integer pow2(int e) { return Integer(1) << e; }

int v2(const Integer& x) { return static_cast<int>(boost::multiprecision::lsb(abs(x))); }

// k c_k = -sum_{i=1..k} s_i c_{k-i}; throws if the division is not exact.
Integer newton_step(const std::vector<Integer>& c, const std::vector<Integer>& s, int k) {
  Integer acc = 0;
  for (int i = 1; i <= k; ++i) acc += s[i - 1] * c[k - i];
  if (acc % k != 0) throw DomainError("counts do not give an integral L-polynomial");
  return -acc / k;
}

}  // namespace

Integer LPolynomial::at_one() const {
  Integer sum = 0;
  for (const auto& c : coeffs) sum += c;
  return sum;
}

std::vector<Integer> LPolynomial::power_sums(int n) const {
  const int deg = 2 * genus;
  auto c = [&](int i) { return i <= deg ? coeffs[i] : Integer(0); };
  std::vector<Integer> s;
  for (int k = 1; k <= n; ++k) {
    Integer acc = -Integer(k) * c(k);
    for (int i = 1; i < k; ++i) acc -= s[i - 1] * c(k - i);
    s.push_back(acc);
  }
  return s;
}

LPolynomial LPolynomial::base_change(int k) const {
  if (k < 1) throw DomainError("base change degree must be positive");
  const int deg = 2 * genus;
  const auto s = power_sums(deg * k);
  std::vector<Integer> sk;
  for (int j = 1; j <= deg; ++j) sk.push_back(s[j * k - 1]);
  LPolynomial out{genus, q_log * k, {Integer(1)}};
  for (int j = 1; j <= deg; ++j) out.coeffs.push_back(newton_step(out.coeffs, sk, j));
  return out;
}

void LPolynomial::validate() const {
  if (genus < 1 || q_log < 1) throw DomainError("L-polynomial needs genus and q");
  if (static_cast<int>(coeffs.size()) != 2 * genus + 1) throw DomainError("L-polynomial must have degree 2g");
  if (coeffs[0] != 1) throw DomainError("L-polynomial must have constant term 1");
  for (int i = 0; i <= genus; ++i) {
    if (coeffs[2 * genus - i] != pow2(q_log * (genus - i)) * coeffs[i])
      throw DomainError("functional equation fails at index " + std::to_string(2 * genus - i));
  }
}

LPolynomial zeta_lpoly(int genus, const std::vector<std::uint64_t>& counts, int q_log) {
  if (genus < 1) throw DomainError("genus must be at least 1");
  if (static_cast<int>(counts.size()) < genus) throw DomainError("need #C(F_{q^k}) for k = 1..g");
  const int deg = 2 * genus;
  std::vector<Integer> s;
  for (std::size_t k = 1; k <= counts.size(); ++k)
    s.push_back(pow2(q_log * static_cast<int>(k)) + 1 - Integer(counts[k - 1]));

  LPolynomial l{genus, q_log, {Integer(1)}};
  for (int k = 1; k <= genus; ++k) l.coeffs.push_back(newton_step(l.coeffs, s, k));
  for (int k = genus + 1; k <= deg; ++k) l.coeffs.push_back(pow2(q_log * (k - genus)) * l.coeffs[deg - k]);

  // surplus counts must agree with the completed polynomial
  const auto expected = l.power_sums(static_cast<int>(s.size()));
  for (std::size_t k = static_cast<std::size_t>(genus); k < s.size(); ++k) {
    if (expected[k] != s[k])
      throw DomainError("count over degree " + std::to_string(k + 1) + " violates the functional equation");
  }
  return l;
}

LPolynomial lpoly_by_counting(int genus, int q_log) {
  if (q_log < 1 || q_log * genus > 20) throw DomainError("counting needs q_log * g <= 20");
  std::vector<std::uint64_t> counts;
  // count past g when cheap so the functional equation gets checked too
  const int kmax = std::max(genus, std::min(2 * genus, 20 / q_log));
  for (int k = 1; k <= kmax; ++k)
    counts.push_back(HyperellipticCurve(genus, FieldContext::of(q_log * k)).count_points());
  return zeta_lpoly(genus, counts, q_log);
}

NewtonPolygonCertificate is_supersingular(const LPolynomial& l) {
  l.validate();
  NewtonPolygonCertificate cert;
  for (int i = 0; i <= 2 * l.genus; ++i) {
    if (l.coeffs[i] != 0) cert.points.emplace_back(i, v2(l.coeffs[i]));
  }
  // lower hull, monotone chain
  for (const auto& p : cert.points) {
    while (cert.polygon.size() >= 2) {
      const auto& a = cert.polygon[cert.polygon.size() - 2];
      const auto& b = cert.polygon.back();
      const long long cross = static_cast<long long>(b.first - a.first) * (p.second - a.second) -
                              static_cast<long long>(b.second - a.second) * (p.first - a.first);
      if (cross > 0) break;
      cert.polygon.pop_back();
    }
    cert.polygon.push_back(p);
  }
  for (const auto& [i, v] : cert.points) {
    if (2 * v < i * l.q_log) {
      cert.witness = i;
      break;
    }
  }
  cert.supersingular = cert.witness < 0 && cert.points.back().second == l.genus * l.q_log;
  return cert;
}

void to_json(nlohmann::json& j, const LPolynomial& l) {
  auto coeffs = nlohmann::json::array();
  for (const auto& c : l.coeffs) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
      coeffs.push_back(c.convert_to<std::int64_t>());
    else
      coeffs.push_back(c.str());
  }
  j = {{"genus", l.genus}, {"q_log", l.q_log}, {"coeffs", coeffs}};
}

void to_json(nlohmann::json& j, const NewtonPolygonCertificate& c) {
  auto pts = nlohmann::json::array();
  for (const auto& [i, v] : c.points) pts.push_back({i, v});
  auto poly = nlohmann::json::array();
  for (const auto& [i, v] : c.polygon) poly.push_back({i, v});
  j = {{"supersingular", c.supersingular}, {"points", pts}, {"polygon", poly}};
  if (c.witness >= 0) j["witness"] = c.witness;
}

}  // namespace lamekit::hyper
