#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "qwalk/errors.hpp"

using namespace qwalk::cli;

int main(int argc, char** argv) {
  CLI::App app{"Quantum-walk operators, spectra, supports and cospectral tables of digraphs"};
  app.require_subcommand(1);

  BuildOptions build;
  auto* cmd_build = app.add_subcommand("build", "Print walk operators exactly");
  add_input_options(*cmd_build, build.input);
  add_eta_options(*cmd_build, build.eta, true);
  cmd_build
      ->add_option("--op", build.ops,
                   "K, C, S, S_theta, D_theta, U_theta, U, R, F_t, F_o, H_eta, H, H_tilde, D")
      ->capture_default_str();
  cmd_build->add_flag("--float", build.with_float, "Also print floating values");

  SpectrumOptions spectrum;
  auto* cmd_spectrum = app.add_subcommand("spectrum", "Spectrum as JSON");
  add_input_options(*cmd_spectrum, spectrum.input);
  add_eta_options(*cmd_spectrum, spectrum.eta, true);
  cmd_spectrum->add_option("--route", spectrum.route, "mapping, direct or both")
      ->check(CLI::IsMember({"mapping", "direct", "both"}))
      ->capture_default_str();
  cmd_spectrum->add_option("--of", spectrum.of, "U, H_eta, H or H_tilde")->capture_default_str();
  cmd_spectrum->add_flag("--charpoly", spectrum.charpoly, "Include the exact polynomial");
  cmd_spectrum->add_option("--tolerance", spectrum.tolerance, "Agreement bound for --route both")
      ->capture_default_str();

  SupportsOptions supports;
  auto* cmd_supports = app.add_subcommand("supports", "Supports of D_theta U_theta^n");
  add_input_options(*cmd_supports, supports.input);
  add_eta_options(*cmd_supports, supports.eta, true);
  cmd_supports->add_option("--power,-n", supports.power, "Power n")->capture_default_str();
  cmd_supports->add_option("--sign", supports.sign, "+, - or both")
      ->check(CLI::IsMember({"+", "-", "both"}))
      ->capture_default_str();
  cmd_supports->add_flag("--check", supports.check,
                         "Verify the square-support regimes, trace and (U^2)^- identity");
  cmd_supports->add_flag("--probe", supports.probe,
                         "Run --check on digraphs outside its hypothesis, as a report");
  cmd_supports->add_option("--format", supports.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  TablesOptions tables;
  auto* cmd_tables = app.add_subcommand("tables", "Cospectral classification tables");
  add_eta_options(*cmd_tables, tables.eta, true);
  cmd_tables->add_option("--order", tables.order, "Largest order")->capture_default_str();
  cmd_tables->add_option("--from", tables.from, "Smallest order")->capture_default_str();
  cmd_tables->add_option("--functor", tables.functors,
                         "A, H, Heta or U2plus (repeatable); default: the six reference tables");
  cmd_tables->add_option("--format", tables.format, "csv, json or md")
      ->check(CLI::IsMember({"csv", "json", "md", "markdown"}))
      ->capture_default_str();
  cmd_tables->add_option("--jobs,-j", tables.jobs, "Worker threads")->capture_default_str();
  cmd_tables->add_flag("--long-run", tables.long_run, "Allow order 6");
  cmd_tables->add_option("--checkpoint", tables.checkpoint,
                         "Directory for per-table checkpoint files (resumable)");
  cmd_tables->add_option("--output-dir", tables.output_dir, "Write one file per table");
  cmd_tables->add_flag("--verify-paper", tables.verify_paper,
                       "Compare every cell with the published values");
  cmd_tables->add_flag("--progress", tables.progress, "Report progress on stderr");

  VerifyOptions verify;
  auto* cmd_verify = app.add_subcommand("verify", "Run the invariant suite");
  cmd_verify->add_option("--order", verify.order, "Largest order of exhaustive sweeps")
      ->capture_default_str();
  cmd_verify->add_option("--regular-order", verify.regular_order,
                         "Largest order of regular digraphs")
      ->capture_default_str();
  cmd_verify->add_option("--graph-order", verify.graph_order,
                         "Largest order of undirected regular graphs")
      ->capture_default_str();
  cmd_verify->add_option("--tables-order", verify.tables_order, "Largest table order, 0 skips")
      ->capture_default_str();
  cmd_verify->add_option("--jobs,-j", verify.jobs, "Worker threads")->capture_default_str();
  cmd_verify->add_option("--seed", verify.seed, "Random seed")->capture_default_str();
  cmd_verify->add_option("--format", verify.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*cmd_build) return run_build(build);
    if (*cmd_spectrum) return run_spectrum(spectrum);
    if (*cmd_supports) return run_supports(supports);
    if (*cmd_tables) return run_tables(tables);
    if (*cmd_verify) return run_verify(verify);
  } catch (const qwalk::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const qwalk::CheckpointError& e) {
    std::cerr << "checkpoint error: " << e.what() << '\n';
    return kParse;
  } catch (const qwalk::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
