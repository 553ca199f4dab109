#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vmc/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"virtual multicrossing toolkit"};
  app.require_subcommand(1);

  vmc::cli::GlobalOptions opts;
  app.add_flag("--json", opts.json, "emit the report as JSON");
  app.add_flag("--oracle", opts.oracle, "re-derive counts by brute force and compare");
  app.add_option("--bound", opts.bound, "brute-force census size limit")->capture_default_str();

  std::string notation, gauss_text, petal_file, crossing_text, out_json, out_svg;
  bool batch = false, reflect = false;
  int n = 0;
  vmc::cli::CountSelection sel;
  bool all = false;

  auto* validate = app.add_subcommand("validate", "check a multicrossing notation");
  validate->fallthrough();
  validate->add_option("notation", notation, "crossing notation {heights; virtual pairs}");
  validate->add_flag("--batch", batch, "read one notation per line from stdin");

  auto* count = app.add_subcommand("count", "exact and asymptotic crossing counts");
  count->fallthrough();
  count->add_option("n", n, "number of strands")->required();
  count->add_flag("--bell", sel.bell, "set partitions of the strands");
  count->add_flag("--fragmented", sel.fragmented, "labeled crossing types");
  count->add_flag("--types", sel.types, "types up to rotation, with fixed-point terms");
  count->add_flag("--almost", sel.almost, "almost virtual types");
  count->add_flag("--estimate", sel.estimate, "asymptotic estimate and ratio");
  count->add_flag("--all", all, "everything (the default when nothing is selected)");

  auto* enumerate = app.add_subcommand("enumerate", "list crossing types up to rotation");
  enumerate->fallthrough();
  enumerate->add_option("n", n, "number of strands")->required();
  enumerate->add_flag("--reflect", reflect, "quotient by reflections too");

  auto* petal = app.add_subcommand("petal", "compile a signed Gauss code to a petal diagram");
  petal->fallthrough();
  petal->add_option("code", gauss_text, "signed Gauss code, e.g. O1+U2+U1+O2+");
  petal->add_option("--out", out_json, "write the diagram as JSON to this path");
  petal->add_option("--svg", out_svg, "render the diagram as SVG to this path");

  auto* recover = app.add_subcommand("recover", "read the Gauss code off a diagram file");
  recover->fallthrough();
  recover->add_option("file", petal_file, "petal diagram JSON file")->required();

  auto* roundtrip = app.add_subcommand("roundtrip", "compile, recover and compare");
  roundtrip->fallthrough();
  roundtrip->add_option("code", gauss_text, "signed Gauss code");
  roundtrip->add_flag("--batch", batch, "read one code per line from stdin");

  auto* render = app.add_subcommand("render", "draw a crossing or a diagram file as SVG");
  render->fallthrough();
  render->add_option("--crossing", crossing_text, "crossing notation to draw");
  render->add_option("--petal", petal_file, "petal diagram JSON file to draw");
  render->add_option("--out", out_svg, "output SVG path (stdout payload otherwise)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  vmc::cli::CliReport report;
  if (*validate) {
    report = batch ? vmc::cli::run_batch("validate", std::cin, opts)
                   : vmc::cli::cmd_validate(notation, opts);
  } else if (*count) {
    report = vmc::cli::cmd_count(n, sel, opts);
  } else if (*enumerate) {
    report = vmc::cli::cmd_enumerate(n, reflect, opts);
  } else if (*petal) {
    report = vmc::cli::cmd_petal(gauss_text, out_json, out_svg, opts);
  } else if (*recover) {
    report = vmc::cli::cmd_recover(petal_file, opts);
  } else if (*roundtrip) {
    report = batch ? vmc::cli::run_batch("roundtrip", std::cin, opts)
                   : vmc::cli::cmd_roundtrip(gauss_text, opts);
  } else if (*render) {
    if (crossing_text.empty() == petal_file.empty()) {
      report.command = "render";
      report.status = vmc::cli::Status::invalid_input;
      report.diagnostics.push_back("pass exactly one of --crossing or --petal");
    } else {
      const auto subject = crossing_text.empty() ? vmc::cli::RenderSubject::petal
                                                 : vmc::cli::RenderSubject::crossing;
      const auto& input = crossing_text.empty() ? petal_file : crossing_text;
      report = vmc::cli::cmd_render(subject, input, out_svg, opts);
    }
  }

  if (opts.json)
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << report.to_text();
  return report.exit_code();
}
