// hyperres: command-line front end for the experiment runner.
//
//   hyperres green-check --trials 100 --seed 1
//   hyperres grd-verify --vars x,y --forms "x, y" --degree 1
//   hyperres --config run.toml eakin-sathaye --p 3
//
// Options may also come from a TOML/INI file given with --config; flags on
// the command line win over values in the file.

#include <iostream>

#include "CLI11.hpp"
#include "hyperres/cli.hpp"
#include "hyperres/restriction.hpp"

namespace {

using hyperres::cli::ExperimentConfig;

void add_common(CLI::App* app, ExperimentConfig& c) {
  app->add_option("--field", c.field, "prime modulus or Q")->capture_default_str();
  app->add_option("--seed", c.seed, "master seed")->capture_default_str();
  app->add_option("--trials", c.trials, "number of trials (command-specific default)");
  app->add_option("--out", c.out, "write the report here instead of stdout");
  app->add_option("--format", c.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app->add_flag("--exploratory", c.exploratory, "run even when the hypotheses fail");
}

void add_ring(CLI::App* app, ExperimentConfig& c) {
  app->add_option("--vars", c.vars, "variable names")->delimiter(',');
  app->add_option("--ideal", c.ideal, "comma-separated homogeneous generators");
  app->add_option("--toric", c.toric,
                  "segre:2,2 | veronese:2,2 | segre-veronese:2,2/2,1 | chain:1,2 | fiber-cone:x^2;x*y;y^2");
  app->add_option("--random-gens", c.random_gens, "degrees of extra random generators")->delimiter(',');
}

void add_forms(CLI::App* app, ExperimentConfig& c) {
  app->add_option("--forms", c.forms, "comma-separated linear forms");
  app->add_option("--random-forms", c.random_forms, "number of sampled forms");
  app->add_flag("--structured", c.structured, "sample structured forms on the toric presentation");
  app->add_option("--variant", c.variant, "structured or reduction variant");
  app->add_flag("--zero-form", c.zero_form, "use the zero linear form");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperplane restriction experiments"};
  app.set_config("--config", "", "read options from a TOML/INI file");
  app.require_subcommand(1);
  ExperimentConfig c;

  auto* green = app.add_subcommand("green-check", "randomized Green bound checks");
  add_common(green, c);
  add_ring(green, c);
  add_forms(green, c);
  green->add_option("--max-vars", c.max_vars, "largest number of variables")->capture_default_str();
  green->add_option("--max-gen-degree", c.max_gen_degree, "largest generator degree")->capture_default_str();
  green->add_option("--max-d", c.max_degree, "check degrees 1..d")->capture_default_str();

  auto* grd = app.add_subcommand("grd-verify", "verify the (Gr,d) ladder conditions");
  add_common(grd, c);
  add_ring(grd, c);
  add_forms(grd, c);
  grd->add_option("--degree", c.degree, "the degree d")->capture_default_str();
  grd->add_flag("--stronger", c.stronger, "also check the strengthened condition (4)");

  auto* lex = app.add_subcommand("lex-restrict", "lex-segment restriction identity");
  add_common(lex, c);
  lex->add_option("--hf", c.hf, "explicit Hilbert function, e.g. 1,2,1,1");
  lex->add_option("--nvars", c.nvars, "number of variables for --hf")->capture_default_str();
  lex->add_option("--max-vars", c.max_vars, "largest number of variables")->capture_default_str();
  lex->add_option("--horizon", c.horizon, "last degree of random Hilbert functions")->capture_default_str();

  auto* es = app.add_subcommand("eakin-sathaye", "search for reductions");
  add_common(es, c);
  add_ring(es, c);
  es->add_option("--i", c.power, "the power i")->capture_default_str();
  es->add_option("--p", c.num_elements, "number of elements p")->capture_default_str();
  es->add_option("--variant", c.variant,
                 "general | segre-product | veronese-power | segre-veronese | chain-partial-sums");
  es->add_option("--max-trials", c.max_trials, "search budget")->capture_default_str();
  es->add_option("--char-bound", c.characteristic_bound, "smallest admissible prime for power variants")
      ->capture_default_str();

  auto* demo = app.add_subcommand("toric-demo", "build a toric presentation");
  add_common(demo, c);
  demo->add_option("--toric", c.toric, "presentation spec")->required();
  demo->add_option("--vars", c.vars, "variable names for fiber-cone generators")->delimiter(',');
  demo->add_option("--variant", c.variant, "structured variant for the samples");
  demo->add_option("--degree", c.degree, "print the Hilbert function up to this degree")->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  c.command = app.get_subcommands().front()->get_name();

  try {
    auto report = hyperres::cli::run_command(c);
    hyperres::cli::write_report(report, c);
    return report.exit_status;
  } catch (const hyperres::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return hyperres::cli::kExitError;
}
