#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "lamekit/app/reports.hpp"

namespace {

std::uint64_t parse_hex(const std::string& s) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &used, 16);
  } catch (const std::exception&) {
    throw lamekit::app::UsageError("not a hex value: " + s);
  }
  if (used != s.size()) throw lamekit::app::UsageError("not a hex value: " + s);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lame curves in characteristic 2: classification, ramification and counting reports"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false, as_csv = false;
  std::uint64_t seed = 0;
  std::string output;
  auto* jflag = app.add_flag("--json", as_json, "JSON report (default)");
  auto* cflag = app.add_flag("--csv", as_csv, "CSV projection of the report");
  jflag->excludes(cflag);
  app.add_option("--seed", seed, "seed for every randomized step")->capture_default_str();
  app.add_option("--output", output, "write here instead of standard output");

  std::function<lamekit::app::Report()> run;

  std::uint64_t order = 0;
  auto* classify = app.add_subcommand("classify", "classes of exact order n on the supersingular curve");
  classify->add_option("--order", order, "odd 3 <= n <= 13")->required();
  classify->callback([&] { run = [&] { return lamekit::app::classify_report(order, seed); }; });

  std::string t_hex;
  int field = 4;
  auto* ramify = app.add_subcommand("ramify", "ramification profile of f_P for the least point of order n");
  ramify->add_option("--order", order, "odd 3 <= n <= 13")->required();
  auto* tflag = ramify->add_option("--ordinary", t_hex, "t in hex: use Y^2 + XY = X^3 + tX");
  ramify->add_option("--field", field, "degree of the field holding t")->capture_default_str()->needs(tflag);
  ramify->callback([&] {
    std::optional<std::uint64_t> t;
    if (!t_hex.empty()) t = parse_hex(t_hex);
    run = [&, t] { return lamekit::app::ramify_report(order, t, field, seed); };
  });

  std::uint64_t max_n = 13;
  auto* counts = app.add_subcommand("counts", "class counts against the closed formulas");
  counts->add_option("--max-n", max_n, "largest odd n")->required();
  counts->callback([&] { run = [&] { return lamekit::app::counts_report(max_n, seed); }; });

  std::uint64_t degree = 9;
  auto* triples = app.add_subcommand("triples", "3-ples of degree n and the lifting identity");
  triples->add_option("--degree", degree, "odd n")->required();
  triples->callback([&] { run = [&] { return lamekit::app::triples_report(degree); }; });

  int d = 1;
  auto* moduli = app.add_subcommand("moduli", "field-of-moduli census over F_{2^d}");
  moduli->add_option("--d", d, "1 <= d <= 8")->required();
  moduli->callback([&] { run = [&] { return lamekit::app::moduli_report(d, seed); }; });

  int genus = 1, hfield = 1, hsamples = 4;
  auto* hyper = app.add_subcommand("hyper", "Y^2 + Y = X^(2g+1): L-polynomial, certificate, class orders");
  hyper->add_option("--genus", genus, "g >= 1")->required();
  hyper->add_option("--field", hfield, "d, the curve lives over F_{2^d}")->required();
  hyper->add_option("--samples", hsamples, "random points for class orders")->capture_default_str();
  hyper->callback([&] { run = [&] { return lamekit::app::hyper_report(genus, hfield, hsamples, seed); }; });

  int jsamples = 100;
  auto* jcheck = app.add_subcommand("jcheck", "weighted j and Delta against the standard formulary");
  jcheck->add_option("--samples", jsamples, "random rational points")->capture_default_str();
  jcheck->callback([&] { run = [&] { return lamekit::app::jcheck_report(jsamples, seed); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const lamekit::app::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  lamekit::app::Report report;
  try {
    report = run();
  } catch (const lamekit::app::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  const std::string text = as_csv ? lamekit::app::to_csv_text(report.csv) : report.json.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << output << "\n";
      return 2;
    }
    out << text;
  }
  for (const auto& f : report.failures) std::cerr << "assertion failed: " << f << "\n";
  return report.passed() ? 0 : 1;
}
