#include "hardy/spec_io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  CLI::App app{"Numerical toolkit for operator-valued Hardy spaces of the circle and disk"};
  app.require_subcommand(1);

  hardy::RunConfig config;
  std::vector<double> zeta_values;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--spec", config.spec_path, "Path to a JSON function spec");
    sub->add_option("--grid", config.grid_n, "Circle grid size (default 256)");
    sub->add_option("--ladder", config.ladder_k, "Radius ladder depth (default 10)");
    sub->add_option("--p", config.p, "Exponent: 1, 2, inf, or a decimal >= 1");
    sub->add_option("--out", config.out_path,
                    "Artifact path (written atomically); omit to print to stdout");
    sub->add_option("--format", config.format, "Artifact format: json or csv");
    sub->add_option("--seed", config.seed, "Random seed for probe vectors");
    sub->add_option("--tol", config.tol, "Tolerance for boundary/verify commands");
    return sub;
  };

  add_common(app.add_subcommand("fourier", "Fourier coefficients of a circle function"));
  CLI::App* poisson =
      add_common(app.add_subcommand("poisson", "Strong Poisson integral at a point"));
  poisson->add_option("--zeta", zeta_values, "Evaluation point as RE IM")
      ->expected(2);
  add_common(app.add_subcommand("norm", "Circle or disk norms of a function"));
  add_common(app.add_subcommand("boundary", "Radial boundary extraction"));
  add_common(app.add_subcommand("gallery", "Materialize a gallery member"));
  CLI::App* verify = add_common(app.add_subcommand("verify", "Run a verification claim"));
  verify->add_option("--claim", config.claim,
                     "One of: isometry, contraction, adjoint, roundtrip, gaps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage errors exit 2 regardless of CLI11's own code
  }

  config.command = app.get_subcommands().front()->get_name();
  if (zeta_values.size() == 2) {
    config.zeta = hardy::Complex(zeta_values[0], zeta_values[1]);
  }
  return hardy::run(config);
}
