#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lyk/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"lieykit: Lie-Yamaguti algebras, crossed homomorphisms, "
               "cohomology and deformations over exact rationals"};
  app.require_subcommand(1);

  std::string file, task, crossed, out_path;
  long degree = -1, order = -1;

  CLI::App* run = app.add_subcommand("run", "run a task from a problem file");
  run->add_option("file", file, "problem file (JSON)")->required();
  run->add_option("task", task, "task name or operation name")->required();
  run->add_option("--degree", degree, "cochain degree");
  run->add_option("--crossed", crossed, "crossed map name");
  run->add_option("--order", order, "series truncation order");
  run->add_option("--out", out_path, "also write the report to a file");

  CLI::App* examples =
      app.add_subcommand("examples", "print the bundled demonstration suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    if (examples->parsed()) {
      std::cout << lyk::serialize_problem(lyk::bundled_suite());
      return 0;
    }

    lyk::ProblemFile pf = lyk::parse_problem(file);
    nlohmann::json overrides = nlohmann::json::object();
    if (degree >= 0) overrides["degree"] = degree;
    if (order >= 0) overrides["order"] = order;
    if (!crossed.empty()) overrides["crossed"] = crossed;

    lyk::TaskResult result = lyk::run_task(pf, task, overrides);
    std::cout << result.text;
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return 2;
      }
      out << result.text;
    }
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
