#pragma once

// The standard test corpus and the batch bound report run over it.

#include <cstdint>
#include <string>
#include <vector>

#include "polyface/bounds.hpp"
#include "polyface/generators.hpp"

namespace polyface {

/// Families for d <= 6 (cube d <= 5), cyclic polytopes for several n,
/// pyramids and prisms for d = 2..5, and 20 random-sphere hulls with
/// d in {2, 3, 4}, n <= 12, seeds seed, seed + 1, ...
std::vector<FamilySpec> standard_corpus(std::uint64_t seed = 0);

/// Cartesian product of families and dims. Cyclic uses n = dim + 3,
/// random-sphere uses n = 2 dim + 2 and `seed`. Cube dims above 5 are
/// rejected by the generator.
std::vector<FamilySpec> corpus_product(const std::vector<Family>& families, int dim_lo, int dim_hi,
                                       std::uint64_t seed);

/// Display name used in the CSV family column; random-sphere carries its seed.
std::string corpus_label(const FamilySpec& spec);

struct CorpusEntry {
  FamilySpec spec;
  std::string label;
  BoundReport bounds;
  BaranyReport barany;
  XueReport xue;
  BjornerReport bjorner;
  bool euler_ok = false;
  std::string error;  // set when generation or a check threw

  bool ok() const;
};

/// Builds every polytope (in parallel) and evaluates the exact checks.
/// Entries come back sorted by (family, dim, n, seed).
std::vector<CorpusEntry> run_corpus(const std::vector<FamilySpec>& specs);

/// family,dim,n,k,f_k,ratio_vertices,rho_vertices,ratio_facets,rho_facets,equality_flags,verdicts
std::string corpus_csv_header();
std::string corpus_csv(const std::vector<CorpusEntry>& entries);

}  // namespace polyface
