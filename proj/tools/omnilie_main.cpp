#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "omnilie/cli_io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"omnilie: exact checks for omni-Lie algebroids, Dirac structures and their "
               "correspondences"};
  app.get_formatter()->column_width(28);

  std::string command;
  app.add_option("command", command,
                 "one of: check-lie, check-dirac, lift, reduce, normalizer, derivations, "
                 "cohomology, deform, bialgebra, graph-lambda, pi-bracket, verify-axioms, "
                 "catalog")
      ->required();

  std::string model_spec;
  app.add_option("--model", model_spec, "model file path, or catalog:NAME for a built-in");
  omnilie::RunFlags flags;
  app.add_option("--seed", flags.seed, "seed for the deterministic corpus generator");
  app.add_option("--d", flags.d, "base dimension for generated corpora");
  app.add_option("--r", flags.r, "fibre rank for generated corpora");
  app.add_option("--deg", flags.deg, "polynomial degree bound for generated corpora");
  app.add_option("--count", flags.count, "number of generated trials");
  std::string format = "text";
  app.add_option("--format", format, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  std::string out_path;
  app.add_option("--out", out_path,
                 "write the primary artifact here: the result model for lift/reduce and "
                 "catalog resolution, the report otherwise");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error (input): " << e.what() << "\n";
    return 2;
  }

  try {
    std::optional<omnilie::ModelFile> model;
    if (!model_spec.empty()) model = omnilie::load_model(model_spec);
    const omnilie::RunResult res = omnilie::run_command(command, model, flags);
    const std::string rendered =
        format == "json" ? res.report.to_json() : res.report.to_text();
    std::cout << rendered;
    if (!out_path.empty()) {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) {
        std::cerr << "error (input): cannot write " << out_path << "\n";
        return 2;
      }
      f << (res.artifact ? omnilie::serialize_model(*res.artifact) : rendered);
    }
    return omnilie::exit_code(res.report);
  } catch (const omnilie::Error& e) {
    std::cerr << "error (" << omnilie::error_kind_name(e.kind()) << "): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
