#pragma once

// Command-line front end. Exit codes: 0 success, 1 domain error, 2 usage.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace origami::cli {

enum class OutputMode { Human, Json };

struct RunConfig {
  std::string subcommand;
  std::string surface_path;  // output directory for `examples`
  std::string word;
  std::vector<std::string> curve_paths;
  OutputMode mode = OutputMode::Human;
  std::optional<long> seed_perturbation;
};

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace origami::cli
