#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cuplength/complex.hpp"
#include "cuplength/invariants.hpp"

namespace cuplength {

struct JobConfig {
  std::string command;
  std::vector<std::string> inputs;
  int max_dim = 2;
  std::optional<double> max_scale;
  double trim_eps = 0.0;
  std::string format = "json";
  std::string output;  // empty: stdout
};

/// Reads a filtration from a complex file, or builds a Vietoris-Rips
/// filtration when the path ends in ".csv". Either way the result is
/// truncated to dimension k + 1.
FilteredComplex load_input(const std::string& path, int k, std::optional<double> max_scale);

/// Preset name ("torus", "torus:L", "circle", "circle:L", "wedge-lower") or a
/// path to a function JSON file.
CupFunction load_function(const std::string& text);

/// Runs one job, writing results to `out` unless config.output is set.
/// Returns the process exit code.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs.
int cli_main(int argc, char** argv);

}  // namespace cuplength
