// Command-line front end: divcert <task> --input FILE [options]

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "divcert/report.hpp"

int main(int argc, char** argv) {
  divcert::TaskSpec spec;
  std::string json_path;
  std::optional<int> degree, cap, mu0;
  std::optional<std::string> theorem, cinf;

  CLI::App app{"Degree-bounded division certificates on affine varieties"};
  app.add_option("task", spec.task, "membership | minimal-degree | regularity | resolution | hypotheses | bounds | theorem")
      ->required();
  app.add_option("--input", spec.input_path, "instance file")->required();
  app.add_option("--degree", degree, "degree rho for membership");
  app.add_option("--cap", cap, "search cap for minimal-degree (default deg Phi + 20)");
  app.add_option("--theorem", theorem, "1.1 | 1.2 | 1.3 | 1.4 | 1.5 | BS");
  app.add_option("--order", spec.order, "grevlex | grlex")->default_val("grevlex");
  app.add_option("--c-infinity", cinf, "integer or -inf (write --c-infinity=-inf)");
  app.add_option("--mu-0", mu0, "Briancon-Skoda constant mu_0");
  app.add_flag("--assert-smooth", spec.assert_smooth, "assert that the closure X is smooth");
  app.add_flag("--assert-pure", spec.assert_pure, "assert that I_V is radical and V pure-dimensional");
  app.add_option("--json", json_path, "also write the report to this file");
  CLI11_PARSE(app, argc, argv);

  spec.degree = degree;
  spec.cap = cap;
  spec.mu_0 = mu0;
  spec.theorem = theorem;
  spec.c_infinity = cinf;

  divcert::RunResult result = divcert::run(spec);
  const std::string text = result.report.dump(2);
  std::cout << text << '\n';
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << '\n';
      return 1;
    }
    out << text << '\n';
  }
  return result.exit_code;
}
