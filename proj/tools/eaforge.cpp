#include <iostream>

#include <CLI11.hpp>

#include "eaforge/eaforge.hpp"

int main(int argc, char** argv) {
  CLI::App app{"entanglement-assisted code constructions from classical codes"};
  app.require_subcommand(1);
  eaforge::CommandRequest req;

  auto wire = [&req](CLI::App* sub, bool need_input) {
    auto* in = sub->add_option("--input", req.input_path, "code, GRS, or report file");
    if (need_input) in->required();
    sub->add_option("--form", req.form, "euclidean|hermitian (default euclidean)");
    sub->add_option("--c", req.c, "ebit count / extra-point toggle");
    sub->add_option("--s", req.s, "expansion factor");
    sub->add_option("--q", req.q, "field order");
    sub->add_option("--r", req.r, "coset count");
    sub->add_option("--k", req.k, "dimension");
    sub->add_option("--budget", req.budget, "distance enumeration budget (default 2^22)");
    sub->add_option("--mode", req.mode, "strict|audit (default strict)");
    sub->add_option("--seed", req.seed, "seed for test harnesses; unused by the CLI core");
    sub->add_option("-o,--output", req.output_path, "write the result to a file");
  };

  wire(app.add_subcommand("code-info", "print length, dimension, distance, hulls, and flags"),
       true);
  wire(app.add_subcommand("derive", "derive both EAQECCs from a classical code's hull"), true);
  auto* construct = app.add_subcommand("construct", "run a named construction, write its report");
  construct->add_option("name", req.construction, "construction name")->required();
  wire(construct, false);
  wire(app.add_subcommand("verify", "recompute a stored report and compare"), true);
  auto* tabulate = app.add_subcommand("tabulate", "emit a CSV of realizable parameter rows");
  tabulate->add_option("table", req.table, "table name (mds-grs)")->required();
  wire(tabulate, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  req.subcommand = app.get_subcommands().front()->get_name();
  return eaforge::run_command(req, std::cout, std::cerr);
}
