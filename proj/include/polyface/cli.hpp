#pragma once

// Command runner behind the `polyface` executable. Argument parsing lives in
// tools/; everything here works on an already-validated RunConfig.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polyface/generators.hpp"

namespace polyface {

enum class Command { Gen, Describe, VerifyBounds, Angles, Project, Corpus };

struct RunConfig {
  Command command = Command::Describe;
  std::string input;   // polytope JSON; empty means build from the family fields
  std::string output;  // empty means stdout
  std::optional<Family> family;
  int dim = 3;
  std::optional<int> n;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  int directions = 20;
  double tolerance_sigma = 4.0;
  /// `project`: explicit direction instead of sampled ones.
  std::optional<std::vector<long long>> direction;
  /// `corpus`: families x dims; both empty means the standard corpus.
  std::vector<Family> families;
  std::optional<std::pair<int, int>> dims;
};

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitBadInput = 2 };

/// Runs one command. Reports go to the output file (or `out`); diagnostics
/// and counterexample dumps go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace polyface
