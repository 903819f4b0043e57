#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "../src/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Tangent-ball (Apollonius) and power vertex kernel"};
  app.require_subcommand(1);

  apollo::cli::SolveOptions solve_opt;
  CLI::App* solve = app.add_subcommand("solve", "solve one d+1 tuple");
  solve->add_option("input", solve_opt.input_path, "generator file (JSON or CSV)")->required();
  solve->add_option("--recipe", solve_opt.recipe, "1|2|3|auto (default auto)")
      ->check(CLI::IsMember({"1", "2", "3", "auto"}));
  std::string signs_text;
  solve->add_option("--signs", signs_text, "tangency signs, e.g. +,-,+");
  solve->add_flag("--all-signs", solve_opt.all_signs, "solve every sign set");
  double tol_value = 0.0;
  CLI::Option* tol_opt = solve->add_option("--tolerance", tol_value, "relative residual tolerance");

  apollo::cli::VerticesOptions vert_opt;
  CLI::App* vertices = app.add_subcommand("vertices", "enumerate diagram vertices of N balls");
  vertices->add_option("input", vert_opt.input_path, "generator file")->required();
  double prune = 0.0;
  CLI::Option* prune_opt =
      vertices->add_option("--prune", prune, "skip tuples with a center pair farther than R");
  double min_radius = 0.0;
  CLI::Option* minr_opt = vertices->add_option("--min-radius", min_radius, "radius cull");
  vertices->add_option("--max-combinations", vert_opt.max_combinations, "tuple count guard");
  vertices->add_flag("--exact", vert_opt.exact, "exact conflict predicates (integer inputs)");
  int scale_exp = 0;
  CLI::Option* se_opt =
      vertices->add_option("--scale-exponent", scale_exp, "integerization scale (power of 10)");
  vertices->add_option("--format", vert_opt.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  double vtol_value = 0.0;
  CLI::Option* vtol_opt =
      vertices->add_option("--tolerance", vtol_value, "relative residual tolerance");

  apollo::cli::Plot2dOptions plot_opt;
  CLI::App* plot = app.add_subcommand("plot2d", "render generators and solutions as SVG");
  plot->add_option("input", plot_opt.input_path, "generator file (d=2)")->required();
  std::string vertices_path;
  CLI::Option* vp_opt = plot->add_option("--vertices", vertices_path, "vertex JSON to overlay");

  apollo::cli::BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand("bench", "time recipes over random sets");
  std::string dims_text = "2,3";
  bench->add_option("--dims", dims_text, "comma-separated dimensions (default 2,3)");
  bench->add_option("--trials", bench_opt.trials, "sets per dimension (default 1000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? apollo::cli::kExitParse : 0;
  }

  if (solve->parsed()) {
    if (!signs_text.empty()) solve_opt.signs = signs_text;
    if (*tol_opt) solve_opt.tolerance = tol_value;
    return apollo::cli::cmd_solve(solve_opt, std::cout, std::cerr);
  }
  if (vertices->parsed()) {
    if (*prune_opt) vert_opt.prune_radius = prune;
    if (*minr_opt) vert_opt.min_radius = min_radius;
    if (*se_opt) vert_opt.scale_exponent = scale_exp;
    if (*vtol_opt) vert_opt.tolerance = vtol_value;
    return apollo::cli::cmd_vertices(vert_opt, std::cout, std::cerr);
  }
  if (plot->parsed()) {
    if (*vp_opt) plot_opt.vertices_path = vertices_path;
    return apollo::cli::cmd_plot2d(plot_opt, std::cout, std::cerr);
  }
  if (bench->parsed()) {
    bench_opt.dims.clear();
    std::string cur;
    for (char c : dims_text + ",") {
      if (c == ',') {
        if (!cur.empty()) bench_opt.dims.push_back(std::stoul(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    return apollo::cli::cmd_bench(bench_opt, std::cout, std::cerr);
  }
  return apollo::cli::kExitParse;
}
