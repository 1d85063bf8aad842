#include "lamekit/lame/quotient.hpp"

#include <algorithm>
#include <map>

#include "lamekit/ec/torsion.hpp"
#include "lamekit/gf2/embed.hpp"

namespace lamekit::lame {

FieldElement rho(const CurvePoint& p) {
  if (p.is_infinity()) throw DomainError("rho is not defined at 0_E");
  const FieldElement& x = p.x();
  return (x.square().square() + x).pow(3);
}

std::vector<LameClass> classify_points(const WeierstrassCurve& e, const std::vector<CurvePoint>& points,
                                       std::uint64_t n, kernels::Exec exec) {
  const auto values = kernels::rho_values(points, exec);
  std::map<u64, std::vector<CurvePoint>> groups;
  for (std::size_t i = 0; i < points.size(); ++i) groups[values[i].bits()].push_back(points[i]);
  std::vector<LameClass> out;
  for (auto& [bits, members] : groups) {
    std::sort(members.begin(), members.end(), [&](const auto& a, const auto& b) { return ec::serialized_less(e, a, b); });
    const auto orbit = aut_orbit(e, members.front());
    if (orbit != members) {
      throw Error("rho fibre over " + e.context().element(bits).hex() + " is not a single orbit (n = " +
                  std::to_string(n) + ")");
    }
    const FieldElement r = e.context().element(bits);
    out.push_back({n, r, gf2::element_degree(r), members.front(), orbit.size()});
  }
  std::sort(out.begin(), out.end(), [](const LameClass& a, const LameClass& b) {
    const auto ra = gf2::minimal_field_representative(a.rho_value);
    const auto rb = gf2::minimal_field_representative(b.rho_value);
    return std::tuple(a.moduli_degree, ra.bits()) < std::tuple(b.moduli_degree, rb.bits());
  });
  return out;
}

std::vector<LameClass> classify_torsion(std::uint64_t n, std::uint64_t seed, kernels::Exec exec) {
  if (n < 3 || n % 2 == 0 || n > 13) throw DomainError("classify_torsion needs odd 3 <= n <= 13");
  const auto e = WeierstrassCurve::supersingular(FieldContext::of(ec::torsion_field_degree(n)));
  const auto all = ec::enumerate_torsion(e, ec::torsion_basis(e, n, seed));
  return classify_points(e, ec::exact_order_subset(e, all, n), n, exec);
}

nlohmann::json to_json(const WeierstrassCurve& e, const LameClass& c) {
  return {{"n", c.order},
          {"rho", gf2::minimal_field_representative(c.rho_value)},
          {"moduli_degree", c.moduli_degree},
          {"rep", ec::point_to_json(e, c.representative)}};
}

}  // namespace lamekit::lame
