// Command-line front door: parse a request, dispatch to the library, emit a
// machine-readable (json/csv) or human-readable (text) report on stdout.
// Exit status 0 = success, 1 = input rejected, 2 = internal invariant
// violation (a "must equal" cross-check failed).

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "wonderful/errors.hpp"
#include "wonderful/reports.hpp"

namespace {

using namespace wonderful;

struct Options {
  std::string type;
  std::string satake;
  std::string format = "text";
  std::uint64_t seed = 0;
  int samples = 1000;
  std::size_t cap = 1000000;
  bool allowHeavy = false;
};

void emit(const Json& report, const std::string& format,
          std::string (*csv)(const Json&), std::string (*text)(const Json&)) {
  if (format == "json")
    std::cout << report.dump(2) << "\n";
  else if (format == "csv")
    std::cout << csv(report);
  else
    std::cout << text(report);
}

RootSystem root_system_for(const Options& opt) {
  if (opt.type.empty()) throw ValidationError("missing --type");
  return build_root_system(parse_cartan_type(opt.type));
}

void run_orbits(const Options& opt) {
  RootSystem rs = root_system_for(opt);
  emit(orbit_poset_report(rs, orbit_poset(rs)), opt.format, orbit_poset_csv, orbit_poset_text);
}

void run_betti(const Options& opt) {
  RootSystem rs = root_system_for(opt);
  WeylGroup W = WeylGroup::enumerate(rs, opt.cap);
  emit(betti_report(rs, W), opt.format, betti_csv, betti_text);
}

void run_fixed_points(const Options& opt) {
  RootSystem rs = root_system_for(opt);
  WeylGroup W = WeylGroup::enumerate(rs, opt.cap);
  emit(fixed_points_report(rs, W), opt.format, fixed_points_csv, fixed_points_text);
}

void run_fan(const Options& opt) {
  RootSystem rs = root_system_for(opt);
  WeylGroup W = WeylGroup::enumerate(rs, opt.cap);
  Fan fan = build_fan(rs, W);
  emit(fan_report(rs, fan, opt.samples, opt.seed), opt.format, fan_csv, fan_text);
}

void run_satake(const Options& opt) {
  SatakeDiagram sd = parse_satake(opt.satake);
  if (!opt.type.empty() && parse_cartan_type(opt.type).name() != sd.ctype.name())
    throw ValidationError("--type " + opt.type + " does not match the Satake type " +
                          sd.ctype.name());
  RootSystem rs = build_root_system(sd.ctype);
  Involution inv = build_involution(rs, sd);
  emit(satake_report(rs, sd, inv), opt.format, satake_csv, satake_text);
}

void run_realize(const Options& opt) {
  RootSystem rs = root_system_for(opt);
  bool isA1 = rs.ctype().name() == "A1";
  bool isA2 = rs.ctype().name() == "A2";
  if (!isA1 && !isA2)
    throw ValidationError("realize supports types A1 and A2 only (got " + rs.ctype().name() + ")");
  bool wedge = isA1 || opt.allowHeavy;  // the A2 wedge expansion is opt-in
  emit(realization_report(rs, wedge), opt.format, realization_csv, realization_text);
}

void run_all(const Options& opt) {
  RootSystem rs = root_system_for(opt);
  WeylGroup W = WeylGroup::enumerate(rs, opt.cap);
  Fan fan = build_fan(rs, W);

  Json j;
  j["report"] = "all";
  j["type"] = rs.ctype().name();
  j["seed"] = opt.seed;
  j["orbits"] = orbit_poset_report(rs, orbit_poset(rs));
  j["betti"] = betti_report(rs, W);
  j["fixed_points"] = fixed_points_report(rs, W);
  j["fan"] = fan_report(rs, fan, opt.samples, opt.seed);
  if (rs.ctype().name() == "A1" || rs.ctype().name() == "A2")
    j["realization"] = realization_report(rs, rs.ctype().name() == "A1" || opt.allowHeavy);

  if (opt.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (opt.format == "csv") {
    throw ValidationError("the combined report has no csv form; use --format json or text");
  } else {
    std::cout << orbit_poset_text(j.at("orbits")) << betti_text(j.at("betti"))
              << fan_text(j.at("fan"));
    if (j.contains("realization")) std::cout << realization_text(j.at("realization"));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorial invariants of wonderful compactifications"};
  app.require_subcommand(1);

  Options opt;

  auto addCommon = [&](CLI::App* cmd, bool needsType) {
    auto* t = cmd->add_option("--type", opt.type, "Cartan type, e.g. A2, G2, B3xA1");
    if (needsType) t->required();
    cmd->add_option("--format", opt.format, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--cap", opt.cap, "Weyl enumeration cap (default 10^6)");
    return cmd;
  };

  auto* cOrbits = addCommon(app.add_subcommand("orbits", "orbit lattice with dimensions"), true);
  auto* cBetti = addCommon(app.add_subcommand("betti", "integral Betti table"), true);
  auto* cFixed =
      addCommon(app.add_subcommand("fixed-points", "torus fixed points and cell dimensions"), true);
  auto* cFan = addCommon(app.add_subcommand("fan", "Weyl chamber fan with certificates"), true);
  cFan->add_option("--seed", opt.seed, "sampling seed for the completeness certificate");
  cFan->add_option("--samples", opt.samples, "number of completeness sample points");
  auto* cSatake = addCommon(app.add_subcommand("satake", "restricted-root data of a Satake diagram"),
                            false);
  cSatake->add_option("--satake", opt.satake, "diagram, e.g. \"A2;black=;arrows=(1,2)\"")
      ->required();
  auto* cRealize =
      addCommon(app.add_subcommand("realize", "exact matrix-realization checks (A1/A2)"), true);
  cRealize->add_flag("--allow-heavy", opt.allowHeavy, "include the A2 wedge expansion");
  auto* cAll = addCommon(app.add_subcommand("all", "every report for one type"), true);
  cAll->add_option("--seed", opt.seed, "sampling seed for the completeness certificate");
  cAll->add_option("--samples", opt.samples, "number of completeness sample points");
  cAll->add_flag("--allow-heavy", opt.allowHeavy, "include the A2 wedge expansion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (cOrbits->parsed()) run_orbits(opt);
    else if (cBetti->parsed()) run_betti(opt);
    else if (cFixed->parsed()) run_fixed_points(opt);
    else if (cFan->parsed()) run_fan(opt);
    else if (cSatake->parsed()) run_satake(opt);
    else if (cRealize->parsed()) run_realize(opt);
    else if (cAll->parsed()) run_all(opt);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
