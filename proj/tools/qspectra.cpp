#include <qspectra/cli/commands.hpp>
#include <qspectra/cli/selftest.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace qspectra::cli;
  CLI::App app{"Quantum spectra, Lefschetz numerology and Borel-Weil-Bott checks"};
  app.require_subcommand(1);

  std::string id;
  ReportOptions ropt;
  auto* report = app.add_subcommand("report", "Spectrum report for a registered variety");
  report->add_option("id", id, "Variety id, e.g. P3, G(2,4), IG(2,6), Jac(E6)")->required();
  report->add_option("--json", ropt.json_path, "Also write the report as JSON");
  report->add_flag("--metadata", ropt.metadata, "Include versions and timings in the JSON");

  std::string file;
  CheckOptions copt;
  auto* check = app.add_subcommand("check", "Check a Lefschetz collection spec file");
  check->add_option("file", file, "Collection spec (JSON)")->required();
  check->add_flag("--bwb", copt.bwb, "Verify exceptionality by Borel-Weil-Bott");
  check->add_flag("--strict", copt.strict, "Fail when the rectangular/residual numerology does not match");
  check->add_option("--json", copt.json_path, "Also write the report as JSON");
  check->add_flag("--metadata", copt.metadata, "Include versions and timings in the JSON");

  std::string filter;
  auto* selftest = app.add_subcommand("selftest", "Run the cross-validation suite");
  selftest->add_option("--filter", filter, "Only run checks of one module");

  std::string dir;
  auto* exporter = app.add_subcommand("export", "Write IG(2,2n) structure constants for n = 2..5");
  exporter->add_option("--dir", dir, "Data directory (default: QSPECTRA_DATA or the built-in one)");

  auto* list = app.add_subcommand("list", "List registered variety ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  if (*report) return cmd_report(id, ropt, std::cout, std::cerr);
  if (*check) return cmd_check(file, copt, std::cout, std::cerr);
  if (*selftest) return cmd_selftest(filter, std::cout, std::cerr);
  if (*exporter) return cmd_export(dir, std::cout, std::cerr);
  if (*list) {
    for (const auto& d : registry()) std::cout << d.id << "\t" << d.display_name << "\n";
    return 0;
  }
  return kInputError;
}
