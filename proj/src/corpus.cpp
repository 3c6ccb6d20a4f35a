#include "polyface/corpus.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "polyface/parallel.hpp"

namespace polyface {

std::vector<FamilySpec> standard_corpus(std::uint64_t seed) {
  std::vector<FamilySpec> out;
  for (int d = 1; d <= 6; ++d) out.push_back({Family::Simplex, d, std::nullopt, 0});
  for (int d = 1; d <= 5; ++d) out.push_back({Family::Cube, d, std::nullopt, 0});
  for (int d = 1; d <= 6; ++d) out.push_back({Family::Cross, d, std::nullopt, 0});
  const std::pair<int, int> cyclic[] = {{2, 5}, {2, 6}, {3, 5}, {3, 6}, {3, 7}, {3, 8}, {4, 6},
                                        {4, 7}, {4, 8}, {5, 7}, {5, 8}, {6, 8}, {6, 9}};
  for (auto [d, n] : cyclic) out.push_back({Family::Cyclic, d, n, 0});
  for (int d = 2; d <= 5; ++d) out.push_back({Family::Pyramid, d, std::nullopt, 0});
  for (int d = 2; d <= 5; ++d) out.push_back({Family::Prism, d, std::nullopt, 0});
  for (int i = 0; i < 20; ++i) {
    const int d = 2 + i % 3;
    out.push_back({Family::RandomSphere, d, std::min(12, d + 3 + i % 6), seed + static_cast<std::uint64_t>(i)});
  }
  return out;
}

std::vector<FamilySpec> corpus_product(const std::vector<Family>& families, int dim_lo, int dim_hi,
                                       std::uint64_t seed) {
  std::vector<FamilySpec> out;
  for (auto f : families) {
    for (int d = dim_lo; d <= dim_hi; ++d) {
      FamilySpec spec{f, d, std::nullopt, 0};
      if (f == Family::Cyclic) spec.n = d + 3;
      if (f == Family::RandomSphere) {
        spec.n = 2 * d + 2;
        spec.seed = seed;
      }
      out.push_back(spec);
    }
  }
  return out;
}

std::string corpus_label(const FamilySpec& spec) {
  std::string label(to_string(spec.family));
  if (spec.family == Family::RandomSphere) label += "/seed=" + std::to_string(spec.seed);
  return label;
}

bool CorpusEntry::ok() const {
  return error.empty() && euler_ok && bounds.ok() && barany.ok && xue.ok && bjorner.ok;
}

std::vector<CorpusEntry> run_corpus(const std::vector<FamilySpec>& specs) {
  std::vector<CorpusEntry> entries(specs.size());
  parallel_for(specs.size(), [&](std::size_t i) {
    CorpusEntry& e = entries[i];
    e.spec = specs[i];
    e.label = corpus_label(specs[i]);
    try {
      const Polytope p = generate(specs[i]);
      const FVector f = f_vector(p);
      const int d = p.dim();
      e.euler_ok = f.euler_sum() == 1 - (d % 2 == 0 ? 1 : -1);
      e.bounds = evaluate_main_bounds(f, is_simple(p), is_simplicial(p));
      e.barany = barany_check(f);
      e.xue = xue_check(f);
      e.bjorner = bjorner_check(f, e.bounds.simple, e.bounds.simplicial);
      e.spec.n = static_cast<int>(p.vertex_count());
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
  });
  std::sort(entries.begin(), entries.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
    auto key = [](const CorpusEntry& e) {
      return std::make_tuple(static_cast<int>(e.spec.family), e.spec.dim, e.spec.n.value_or(0), e.spec.seed);
    };
    return key(a) < key(b);
  });
  return entries;
}

std::string corpus_csv_header() {
  return "family,dim,n,k,f_k,ratio_vertices,rho_vertices,ratio_facets,rho_facets,equality_flags,verdicts";
}

std::string corpus_csv(const std::vector<CorpusEntry>& entries) {
  std::ostringstream out;
  out << corpus_csv_header() << '\n';
  for (const auto& e : entries) {
    const int n = e.spec.n.value_or(0);
    if (!e.error.empty()) {
      out << e.label << ',' << e.spec.dim << ',' << n << ",,,,,,,,ERROR\n";
      continue;
    }
    for (const auto& row : e.bounds.rows) {
      std::string flags;
      if (row.equality_vertices) flags += "V";
      if (row.equality_facets) flags += "F";
      if (flags.empty()) flags = "-";

      std::string verdict;
      auto fail = [&](const char* what) { verdict += verdict.empty() ? std::string("FAIL:") + what : std::string("+") + what; };
      if (!row.satisfied_vertices || !row.satisfied_facets) fail("bound");
      if (row.equality_vertices != row.predicted_vertices || row.equality_facets != row.predicted_facets) {
        fail("equality");
      }
      if (!e.barany.rows[static_cast<std::size_t>(row.k)].at_least_min) fail("barany");
      if (row.k == 0) {
        if (!e.euler_ok) fail("euler");
        if (!e.barany.ok) fail("barany-range");
        if (!e.xue.ok) fail("xue");
        if (!e.bjorner.ok) fail("bjorner");
      }
      if (verdict.empty()) verdict = "PASS";

      out << e.label << ',' << e.spec.dim << ',' << n << ',' << row.k << ',' << row.f_k << ','
          << format_scalar(row.ratio_vertices) << ',' << format_scalar(row.rho_vertices) << ','
          << format_scalar(row.ratio_facets) << ',' << format_scalar(row.rho_facets) << ',' << flags << ','
          << verdict << '\n';
    }
  }
  return out.str();
}

}  // namespace polyface
