#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

using namespace diskmetrics;

int main(int argc, char** argv) {
  CLI::App app{"Visual angle metric of the unit disk"};
  app.require_subcommand(1);

  std::string a_text;
  std::string b_text;
  cli::EvalRequest eval_req;
  auto* eval = app.add_subcommand("eval", "Evaluate v(a,b) by every applicable route and the oracle");
  eval->add_option("--a", a_text, "first point, e.g. \"0.3+0i\"")->required();
  eval->add_option("--b", b_text, "second point")->required();
  eval->add_option("--route", eval_req.routes, "route name or \"all\"")->default_val("all");
  eval->add_option("--format", eval_req.format)->check(CLI::IsMember({"text", "json"}))->default_val("text");

  std::string grid_b = "0+0i";
  cli::GridRequest grid_req;
  auto* grid = app.add_subcommand("grid", "Write v(a, b) on a grid of a over the disk as CSV");
  grid->add_option("--b", grid_b, "fixed second point")->default_val("0+0i");
  grid->add_option("--n", grid_req.n, "grid resolution per axis")->default_val(64);
  grid->add_option("--out", grid_req.output_path, "output CSV path")->default_val("grid.csv");

  cli::SchwarzRequest schwarz_req;
  auto* schwarz = app.add_subcommand("schwarz", "Sweep the visual angle Schwarz lemma over seeded pairs");
  schwarz->add_option("--k", schwarz_req.K, "dilatation K >= 1")->default_val(1.0);
  schwarz->add_option("--map", schwarz_req.map, "mobius or stretch")->default_val("mobius");
  schwarz->add_option("--samples", schwarz_req.samples)->default_val(1000);
  schwarz->add_option("--seed", schwarz_req.seed)->default_val(42);

  cli::SelfTestRequest self_req;
  auto* selftest = app.add_subcommand("selftest", "Run the seeded invariant suites");
  selftest->add_option("--samples", self_req.samples)->default_val(1000);
  selftest->add_option("--seed", self_req.seed)->default_val(42);
  selftest->add_option("--tol", self_req.tol, "route agreement tolerance")->default_val(1e-9);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kUsage;
  }

  try {
    if (*eval) {
      eval_req.a = cli::parse_point(a_text);
      eval_req.b = cli::parse_point(b_text);
      return cli::cmd_eval(eval_req, std::cout, std::cerr);
    }
    if (*grid) {
      grid_req.fixed_b = cli::parse_point(grid_b);
      return cli::cmd_grid(grid_req, std::cout, std::cerr);
    }
    if (*schwarz) return cli::cmd_schwarz(schwarz_req, std::cout, std::cerr);
    if (*selftest) return cli::cmd_selftest(self_req, std::cout, std::cerr);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_code_for(e.kind());
  }
  return cli::kUsage;
}
