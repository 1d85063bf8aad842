#include "lamekit/app/reports.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "lamekit/ec/torsion.hpp"
#include "lamekit/gf2/embed.hpp"
#include "lamekit/hyper/hyper.hpp"
#include "lamekit/lame/census.hpp"
#include "lamekit/lame/counting.hpp"
#include "lamekit/lame/cover.hpp"
#include "lamekit/lame/quotient.hpp"
#include "lamekit/moduli12/moduli.hpp"
#include "lamekit/triples/triples.hpp"

namespace lamekit::app {

using ec::CurvePoint;
using ec::WeierstrassCurve;
using gf2::FieldContext;
using gf2::FieldElement;
using json = nlohmann::json;

void Report::require(bool cond, const std::string& what) {
  if (!cond) failures.push_back(what);
}

void Report::finish(const std::string& command) {
  json["schema"] = 1;
  json["command"] = command;
  json["passed"] = passed();
  json["failures"] = failures;
}

std::string to_csv_text(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      // cells never hold commas except nested lists; quote those
      if (row[i].find(',') != std::string::npos) {
        out << '"' << row[i] << '"';
      } else {
        out << row[i];
      }
    }
    out << '\n';
  }
  return out.str();
}

namespace {

void require_odd_order(std::uint64_t n, std::uint64_t max_n) {
  if (n < 3 || n > max_n || n % 2 == 0)
    throw UsageError("order must be odd with 3 <= n <= " + std::to_string(max_n));
}

std::string cell(const FieldElement& a) {
  const auto m = gf2::minimal_field_representative(a);
  return std::to_string(m.context().degree()) + ":" + m.hex();
}

template <class T>
std::string cell(const T& v) {
  return std::to_string(v);
}

std::string point_cell(const CurvePoint& p, bool want_x) {
  if (p.is_infinity()) return "inf";
  return (want_x ? p.x() : p.y()).hex();
}

// Least point of exact order n in `pts`, by serialized form.
CurvePoint least_point(const WeierstrassCurve& e, const std::vector<CurvePoint>& pts) {
  return *std::min_element(pts.begin(), pts.end(),
                           [&](const CurvePoint& a, const CurvePoint& b) { return ec::serialized_less(e, a, b); });
}

// "7:7:3,1,1,1,1" from the three claimed fibres. Points off the working
// field are unramified once the different sum is certified, so they fill in
// as ones; without the certificate they are left out.
std::string branch_datum(const funcfield::RamificationProfile& prof) {
  std::string out;
  for (std::size_t i = 0; i < prof.fibers.size(); ++i) {
    std::vector<int> m;
    for (const auto& p : prof.fibers[i].points) m.push_back(p.multiplicity);
    if (prof.certified()) m.resize(m.size() + (prof.degree - prof.fibers[i].resolved_multiplicity()), 1);
    std::sort(m.rbegin(), m.rend());
    if (i) out += ':';
    for (std::size_t k = 0; k < m.size(); ++k) out += (k ? "," : "") + std::to_string(m[k]);
  }
  return out;
}

}  // namespace

Report classify_report(std::uint64_t n, std::uint64_t seed) {
  require_odd_order(n, 13);
  Report r;
  const auto e = WeierstrassCurve::supersingular(FieldContext::of(ec::torsion_field_degree(n)));
  const auto classes = lame::classify_torsion(n, seed);
  json list = json::array();
  std::uint64_t points = 0;
  r.csv.push_back({"n", "rho", "moduli_degree", "orbit_size", "rep_x", "rep_y"});
  for (const auto& c : classes) {
    list.push_back(lame::to_json(e, c));
    points += c.orbit_size;
    r.csv.push_back({cell(c.order), cell(c.rho_value), cell(c.moduli_degree), cell(c.orbit_size),
                     point_cell(c.representative, true), point_cell(c.representative, false)});
  }
  const auto expected = lame::class_count_exact(n);
  r.json = {{"n", n},
            {"seed", seed},
            {"field_degree", e.context().degree()},
            {"classes", list},
            {"class_count", classes.size()},
            {"expected_class_count", expected},
            {"points_of_exact_order", points},
            {"psi", lame::psi(n)}};
  r.require(classes.size() == expected, "class count differs from the formula");
  r.require(points == lame::psi(n), "orbits do not cover the points of exact order n");
  r.finish("classify");
  return r;
}

Report ramify_report(std::uint64_t n, std::optional<std::uint64_t> ordinary_t, int field, std::uint64_t seed) {
  require_odd_order(n, 13);
  Report r;
  std::optional<WeierstrassCurve> curve;
  std::vector<CurvePoint> pts;
  if (!ordinary_t) {
    const auto e = WeierstrassCurve::supersingular(FieldContext::of(ec::torsion_field_degree(n)));
    pts = ec::exact_order_subset(e, ec::enumerate_torsion(e, ec::torsion_basis(e, n, seed)), n);
    curve = e;
  } else {
    if (field < 1 || field > 16) throw UsageError("--field must be in 1..16");
    if (*ordinary_t == 0 || *ordinary_t >= (std::uint64_t{1} << field))
      throw UsageError("--ordinary needs a nonzero element of F_{2^field}");
    const auto base = WeierstrassCurve::ordinary(FieldContext::of(field).element(*ordinary_t));
    const int d = ec::ordinary_torsion_field_degree(base, n, 24, seed);
    r.json["point_field_degree"] = d;
    if (d == 0) {
      r.require(false, "no point of exact order " + std::to_string(n) + " over F_{2^D}, D <= 24");
    } else {
      const auto e = base.embed(FieldContext::of(d));
      pts = ec::exact_order_subset(e, ec::rational_torsion(e, n, ec::extension_group_order(base, d / field), seed), n);
      curve = e;
    }
  }
  r.json["n"] = n;
  r.json["seed"] = seed;
  r.json["mode"] = ordinary_t ? "ordinary" : "supersingular";
  if (ordinary_t) {
    r.json["t"] = FieldContext::of(field).element(*ordinary_t).hex();
    r.json["field"] = field;
  }
  if (curve && pts.empty()) r.require(false, "no point of exact order n found");
  if (!curve || pts.empty()) {
    r.finish("ramify");
    return r;
  }

  const auto& e = *curve;
  const auto p = least_point(e, pts);
  const auto cover = lame::normalized_cover(e, p, n);
  const auto rep = lame::analyze_cover(cover, seed);
  r.json["cover"] = lame::to_json(cover, rep);
  r.json["branch_datum"] = branch_datum(rep.profile);
  r.json["different_total"] = rep.profile.different_total;

  r.csv.push_back({"fiber", "x", "y", "index", "different"});
  for (const auto& fib : rep.profile.fibers) {
    const std::string v = fib.value ? fib.value->hex() : "inf";
    for (const auto& fp : fib.points)
      r.csv.push_back({v, point_cell(fp.point, true), point_cell(fp.point, false), cell(fp.multiplicity),
                       cell(fp.different)});
  }
  for (const auto& fp : rep.profile.unclaimed)
    r.csv.push_back({"unclaimed", point_cell(fp.point, true), point_cell(fp.point, false), cell(fp.multiplicity),
                     cell(fp.different)});

  auto offending = [&](const std::string& what) {
    for (const auto& fib : rep.profile.fibers) {
      if (!fib.complete()) return what + "; incomplete fiber " + funcfield::to_json(e, fib).dump();
    }
    return what;
  };
  r.require(rep.profile.certified(), offending("different accounting does not reach 2 deg f"));
  r.require(rep.single_third_point, offending("ramification outside {0_E, P, Q}"));
  const CurvePoint half = e.multiply((n + 1) / 2, p);
  if (!ordinary_t) {
    r.require(cover.q == half, "Q differs from ((n+1)/2) P");
    r.require(rep.profile.fibers.size() == 3, "expected three claimed fibres");
    if (rep.profile.fibers.size() == 3) {
      const auto& inf = rep.profile.fibers[0].points;
      const auto& zero = rep.profile.fibers[1].points;
      r.require(inf.size() == 1 && inf[0].point.is_infinity() && inf[0].multiplicity == static_cast<int>(n),
                offending("fiber over infinity is not n (0_E)"));
      r.require(zero.size() == 1 && zero[0].point == p && zero[0].multiplicity == static_cast<int>(n),
                offending("fiber over 0 is not n (P)"));
    }
    r.require(rep.index_at_q == 3 && rep.tame_at_q, "third point is not tame of index 3");
    r.require(rep.lame_datum(), "branch datum is not (n:n:3,1,...,1)");
    r.require(rep.profile.different_total == static_cast<int>(2 * n), "different total is not 2n");
  } else {
    const auto& k = e.context();
    r.require(cover.q == e.add(half, CurvePoint(k.zero(), k.zero())), "Q differs from ((n+1)/2) P + R");
    r.require(rep.index_at_q == 2, "index at Q is not 2");
    r.require(rep.different_at_q == 2 && !rep.tame_at_q, "Q is not wild with different exponent 2");
  }
  r.finish("ramify");
  return r;
}

Report counts_report(std::uint64_t max_n, std::uint64_t seed) {
  if (max_n < 3 || max_n > 999) throw UsageError("--max-n must be in 3..999");
  Report r;
  json rows = json::array();
  r.csv.push_back({"n", "psi", "exact", "dividing", "brute_exact", "brute_dividing"});
  for (std::uint64_t n = 3; n <= max_n; n += 2) {
    const auto psi = lame::psi(n);
    const auto exact = lame::class_count_exact(n);
    const auto dividing = lame::lame_count_dividing(n);
    json row = {{"n", n}, {"psi", psi}, {"exact", exact}, {"dividing", dividing}};
    std::string be = "", bd = "";
    if (n <= 13) {
      const auto brute_exact = lame::classify_torsion(n, seed).size();
      const auto brute_div = lame::lame_count_dividing_brute(n, seed);
      row["brute_exact"] = brute_exact;
      row["brute_dividing"] = brute_div;
      be = cell(brute_exact);
      bd = cell(brute_div);
      r.require(brute_exact == exact, "n = " + std::to_string(n) + ": brute exact count differs");
      r.require(brute_div == dividing, "n = " + std::to_string(n) + ": brute dividing count differs");
    }
    if (n % 3 != 0) r.require(exact * 24 == psi, "n = " + std::to_string(n) + ": exact count is not psi/24");
    std::uint64_t sum = 0;
    for (std::uint64_t m = 3; m <= n; m += 2) {
      if (n % m == 0) sum += lame::class_count_exact(m);
    }
    r.require(sum == dividing, "n = " + std::to_string(n) + ": exact counts do not sum to the dividing count");
    rows.push_back(row);
    r.csv.push_back({cell(n), cell(psi), cell(exact), cell(dividing), be, bd});
  }
  r.json = {{"max_n", max_n}, {"seed", seed}, {"rows", rows}};
  r.finish("counts");
  return r;
}

Report triples_report(std::uint64_t n) {
  if (n < 3 || n > 999 || n % 2 == 0) throw UsageError("--degree must be odd in 3..999");
  Report r;
  const auto all = triples::enumerate_triples(n);
  json list = json::array();
  std::uint64_t sig1 = 0;
  r.csv.push_back({"n", "a", "b", "c", "signature", "primitive"});
  for (const auto& t : all) {
    list.push_back(triples::to_json(t));
    sig1 += t.signature();
    r.csv.push_back({cell(n), cell(t.a), cell(t.b), cell(t.c), cell(t.signature()), t.primitive() ? "1" : "0"});
  }
  const auto lift = triples::lifting_count_check(n, n <= 13, 0);
  r.json = {{"n", n},
            {"triples", list},
            {"count", all.size()},
            {"signature_one", sig1},
            {"rotation_classes", triples::burnside_class_count(n)},
            {"lifting", triples::to_json(lift)}};
  r.require(lift.holds(), "lifting count identity fails");
  r.require(sig1 == lift.signature_one, "signature-1 tally disagrees");
  r.finish("triples");
  return r;
}

Report moduli_report(int d, std::uint64_t seed) {
  if (d < 1 || d > 8) throw UsageError("--d must be in 1..8");
  Report r;
  const auto census = lame::moduli_census(d, seed);
  const auto eta = lame::eta_closed_form(d);
  const auto truth = lame::degree_count_true(d);
  const std::uint64_t total = census.entries.size();
  r.json = lame::to_json(census);
  r.json["seed"] = seed;
  r.json["total_classes"] = total;
  r.json["expected_total"] = std::uint64_t{1} << d;
  r.json["eta"] = {{"closed_form", eta}, {"true", truth}, {"agree", eta == truth}};
  // the product formula only holds on prime powers; a mismatch is flagged, not failed
  if (eta != truth) r.json["flags"] = {"eta(" + std::to_string(d) + ") = " + std::to_string(eta) +
                                       " but the Moebius count is " + std::to_string(truth)};
  r.require(total == (std::uint64_t{1} << d), "class total is not 2^d");
  r.require(census.consistent(), "per-degree counts differ from the Moebius counts");
  r.csv.push_back({"rho", "moduli_degree", "order", "point_field_degree"});
  for (const auto& c : census.entries)
    r.csv.push_back({cell(c.rho_value), cell(c.moduli_degree), cell(c.order), cell(c.point_field_degree)});
  r.finish("moduli");
  return r;
}

Report hyper_report(int genus, int field, int samples, std::uint64_t seed) {
  if (genus < 1 || genus > 8) throw UsageError("--genus must be in 1..8");
  if (field < 1 || field > 24) throw UsageError("--field must be in 1..24");
  if (genus * field > 60) throw UsageError("#J would overflow 64 bits: need genus * field <= 60");
  if (samples < 0 || samples > 1000) throw UsageError("--samples must be in 0..1000");
  Report r;
  const auto& ctx = FieldContext::of(field);
  const hyper::HyperellipticCurve c(genus, ctx);
  const auto l = c.lpoly();
  const auto cert = hyper::is_supersingular(l);
  const auto n_j = c.jacobian_order();
  const auto count = c.count_points();
  // #C(F_q) = q + 1 + c_1 for the base-changed L
  const hyper::Integer predicted = hyper::Integer(ctx.size()) + 1 + l.coeffs[1];
  const hyper::HyperPoint origin(ctx.zero(), ctx.zero());
  const auto origin_order = hyper::divisor_class_order(c, hyper::class_of_point_pair(c, origin));
  const auto pairs = hyper::point_pair_orders(c, samples, seed);

  r.json = {{"genus", genus},
            {"field", field},
            {"seed", seed},
            {"lpoly", l},
            {"certificate", cert},
            {"point_count", count},
            {"jacobian_order", n_j},
            {"origin_class", hyper::class_of_point_pair(c, origin)},
            {"origin_class_order", origin_order},
            {"point_pairs", pairs}};
  r.require(predicted == count, "point count disagrees with the L-polynomial");
  r.require(cert.supersingular, "Newton polygon is not the slope-1/2 segment: C_g is not supersingular");
  r.require(pairs.all_odd && origin_order % 2 == 1, "a point-pair class has even order");
  r.require(pairs.violations.empty() && origin_order >= static_cast<std::uint64_t>(2 * genus + 1),
            "a point-pair class has order below 2g + 1");
  r.csv.push_back({"genus", "field", "x", "y", "order"});
  r.csv.push_back({cell(genus), cell(field), "0", "0", cell(origin_order)});
  for (const auto& [p, n] : pairs.samples)
    r.csv.push_back({cell(genus), cell(field), p.x().hex(), p.y().hex(), cell(n)});
  r.finish("hyper");
  return r;
}

Report jcheck_report(int samples, std::uint64_t seed) {
  using moduli12::Rational;
  using moduli12::WeightedPoint;
  if (samples < 1 || samples > 100000) throw UsageError("--samples must be in 1..100000");
  Report r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 12);
  auto rational = [&] { return Rational(num(rng), den(rng)); };

  std::optional<Rational> ratio;
  int used = 0, j_mismatch = 0, ratio_mismatch = 0;
  r.csv.push_back({"a", "b", "c", "j", "j_standard", "delta_ratio"});
  for (int i = 0; i < samples; ++i) {
    const WeightedPoint<Rational> p{rational(), rational(), rational()};
    const Rational std_disc = moduli12::standard_discriminant(p);
    if (std_disc == 0) continue;
    ++used;
    const Rational q = moduli12::discriminant_formula(p) / std_disc;
    if (!ratio) ratio = q;
    if (q != *ratio) ++ratio_mismatch;
    const auto j = moduli12::j_formula(p);
    const auto js = moduli12::standard_j(p);
    if (!j || !js || *j != *js) ++j_mismatch;
    r.csv.push_back({moduli12::rational_string(p.a), moduli12::rational_string(p.b), moduli12::rational_string(p.c),
                     j ? moduli12::rational_string(*j) : "none", js ? moduli12::rational_string(*js) : "none",
                     moduli12::rational_string(q)});
  }

  int reps = 0, nonzero_j = 0, lost_order = 0;
  for (std::uint64_t n = 3; n <= 13; n += 2) {
    const auto e = WeierstrassCurve::supersingular(FieldContext::of(ec::torsion_field_degree(n)));
    for (const auto& cls : lame::classify_torsion(n, seed)) {
      ++reps;
      const auto w = moduli12::tate_normal_form(e, cls.representative);
      const auto j = moduli12::forgetful(w);
      if (!j || !j->is_zero()) ++nonzero_j;
      if (!ec::has_exact_order(moduli12::tate_curve(w), CurvePoint(e.context().zero(), e.context().zero()), n))
        ++lost_order;
    }
  }
  r.json = {{"samples", samples},
            {"seed", seed},
            {"rational_points_used", used},
            {"delta_ratio", ratio ? moduli12::rational_string(*ratio) : "none"},
            {"delta_ratio_mismatches", ratio_mismatch},
            {"j_mismatches", j_mismatch},
            {"lame_representatives", reps},
            {"lame_nonzero_j", nonzero_j},
            {"lame_order_lost", lost_order}};
  r.require(used > 0, "no nonsingular sample");
  r.require(ratio_mismatch == 0, "Delta ratio is not constant");
  r.require(!ratio || *ratio == 1, "Delta ratio differs from the fixed constant 1");
  r.require(j_mismatch == 0, "j formula disagrees with c4^3 / Delta");
  r.require(nonzero_j == 0, "a Lame representative has j != 0");
  r.require(lost_order == 0, "Tate form lost the order of P");
  r.finish("jcheck");
  return r;
}

}  // namespace lamekit::app
