#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "polyface/cli.hpp"
#include "polyface/error.hpp"

namespace {

using polyface::Command;
using polyface::RunConfig;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::pair<int, int> parse_dims(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int d = std::stoi(text);
    return {d, d};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyface: exact polytope face counts, angle sums and projections"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string family, families, dims, direction;
  int n = 0;

  struct Sub {
    const char* name;
    const char* help;
    Command command;
  };
  const Sub subs[] = {
      {"gen", "write a generated polytope as JSON", Command::Gen},
      {"describe", "dimension, f-vector, simple/simplicial, Euler check", Command::Describe},
      {"verify-bounds", "face-ratio bounds, min-count, Xue and unimodality checks", Command::VerifyBounds},
      {"angles", "angle sums, curvature sums, angle-sum lower bound, projection bound", Command::Angles},
      {"project", "shadow, upper/lower split, diagram vertices, gap check", Command::Project},
      {"corpus", "batch bound report as CSV", Command::Corpus},
  };
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->callback([&cfg, c = s.command] { cfg.command = c; });
    sub->add_option("-i,--input", cfg.input, "polytope JSON file");
    sub->add_option("-o,--output", cfg.output, "report file (default stdout)");
    sub->add_option("--family", family, "simplex, cube, cross, cyclic, pyramid, prism, random-sphere");
    sub->add_option("--dim", cfg.dim, "dimension")->check(CLI::Range(1, 7));
    sub->add_option("--n", n, "vertex count (cyclic, random-sphere)")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "64-bit seed");
    sub->add_option("--samples", cfg.samples, "Monte Carlo samples per angle")->check(CLI::PositiveNumber);
    sub->add_option("--directions", cfg.directions, "sampled projection directions")->check(CLI::PositiveNumber);
    sub->add_option("--tolerance-sigma", cfg.tolerance_sigma, "standard errors allowed by statistical checks");
    if (s.command == Command::Project) {
      sub->add_option("--direction", direction, "explicit direction, comma separated integers");
    }
    if (s.command == Command::Corpus) {
      sub->add_option("--families", families, "comma separated families");
      sub->add_option("--dims", dims, "dimension range, e.g. 2..5");
    }
  }

  try {
    app.parse(argc, argv);
    if (!family.empty()) cfg.family = polyface::parse_family(family);
    if (n > 0) cfg.n = n;
    for (const auto& f : split(families, ',')) cfg.families.push_back(polyface::parse_family(f));
    if (!dims.empty()) cfg.dims = parse_dims(dims);
    if (!direction.empty()) {
      std::vector<long long> coords;
      for (const auto& c : split(direction, ',')) coords.push_back(std::stoll(c));
      cfg.direction = coords;
    }
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : polyface::kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return polyface::kExitBadInput;
  }
  return polyface::run(cfg, std::cout, std::cerr);
}
