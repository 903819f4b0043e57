#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace apollo::cli {

// exit codes shared by every subcommand
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitGuard = 4;
inline constexpr int kExitUnsupported = 5;

struct SolveOptions {
  std::string input_path;
  std::string recipe = "auto";       // 1 | 2 | 3 | auto
  std::optional<std::string> signs;  // "+,-,+,..."
  bool all_signs = false;
  std::optional<double> tolerance;   // residual_rel (dedupe_rel follows)
};

struct VerticesOptions {
  std::string input_path;
  std::optional<double> prune_radius;
  std::optional<double> min_radius;
  std::uint64_t max_combinations = 1000000;
  bool exact = false;
  std::optional<int> scale_exponent;  // overrides the file's value
  std::string format = "json";        // json | csv
  std::optional<double> tolerance;
};

struct Plot2dOptions {
  std::string input_path;
  std::optional<std::string> vertices_path;
};

struct BenchOptions {
  std::vector<std::size_t> dims = {2, 3};
  int trials = 1000;
};

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err);
int cmd_vertices(const VerticesOptions& opt, std::ostream& out, std::ostream& err);
int cmd_plot2d(const Plot2dOptions& opt, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace apollo::cli
