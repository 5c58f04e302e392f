#include "commands.hpp"

#include "solvlie/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

enum Exit { kPass = 0, kFail = 1, kInputError = 2 };

}  // namespace

int main(int argc, char** argv) {
  using namespace solvlie;

  CLI::App app{"Complex solvmanifolds of dimension 3: structures, lattices, cohomology"};
  app.require_subcommand(1);
  app.fallthrough();
  cli::Options opt;
  std::string json_path;
  bool pretty = false;
  app.add_option("--tol", opt.tol, "Numeric tolerance")->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for randomized commands")->capture_default_str();
  app.add_option("--json", json_path, "Also write the report to this file");
  app.add_flag("--pretty", pretty, "Indent the JSON output");

  std::string algebra, j_path, spec_path, out_dir;
  std::optional<std::string> frame_path;
  std::optional<int> random;

  auto* catalog = app.add_subcommand("catalog", "List the three Lie algebras with their brackets");
  auto* integrable = app.add_subcommand("integrable", "Check integrability of J and its subalgebra h");
  integrable->add_option("algebra", algebra, "Catalog kind or algebra JSON file")->required();
  integrable->add_option("J", j_path, "JSON file with the matrix J")->required()->check(CLI::ExistingFile);
  auto* lattice = app.add_subcommand("lattice", "Verify, classify and compute h1 for a lattice spec");
  lattice->add_option("spec", spec_path, "Lattice spec JSON")->required()->check(CLI::ExistingFile);
  auto* h1 = app.add_subcommand("h1", "dim H^1(M, O) for a lattice spec");
  h1->add_option("spec", spec_path, "Lattice spec JSON")->required()->check(CLI::ExistingFile);
  auto* pk = app.add_subcommand("pseudokahler", "Pseudo-Kaehler existence and invariance factors");
  pk->add_option("spec", spec_path, "Lattice spec JSON")->required()->check(CLI::ExistingFile);
  auto* lemma2 = app.add_subcommand("lemma2", "Bracket matrix spectrum for invariant frames");
  lemma2->add_option("frame", frame_path, "JSON file with Q and P (default Q = P = I)")->check(CLI::ExistingFile);
  lemma2->add_option("--random", random, "Number of seeded random valid frames");
  auto* exporter = app.add_subcommand("export", "Write the bundled example corpus");
  exporter->add_option("dir", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*exporter) {
      cli::export_examples(out_dir);
      return kPass;
    }
    cli::RunReport report;
    if (*catalog)
      report = cli::cmd_catalog(opt);
    else if (*integrable)
      report = cli::cmd_integrable(algebra, j_path, opt);
    else if (*lattice)
      report = cli::cmd_lattice(spec_path, opt);
    else if (*h1)
      report = cli::cmd_h1(spec_path, opt);
    else if (*pk)
      report = cli::cmd_pseudokahler(spec_path, opt);
    else
      report = cli::cmd_lemma2(frame_path, random, opt);

    const std::string text = report.to_json().dump(pretty ? 2 : -1);
    std::cout << text << '\n';
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) throw Error("cannot write '" + json_path + "'");
      out << text << '\n';
    }
    return report.pass ? kPass : kFail;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const DimensionError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
}
