#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polyface/polytope.hpp"

namespace polyface {

/// rho(d, k) = (C(ceil(d/2), k) + C(floor(d/2), k)) / 2 for 0 <= k < d.
Scalar rho(int d, int k);

/// C(a,c) + C(b,c) >= C(ceil((a+b)/2), c) + C(floor((a+b)/2), c).
bool convexity_lemma_check(long long a, long long b, long long c);

struct BoundRow {
  int k = 0;
  long long f_k = 0;
  Scalar ratio_vertices;  // f_k / f_0
  Scalar rho_vertices;    // rho(d, k)
  Scalar ratio_facets;    // f_k / f_{d-1}
  Scalar rho_facets;      // rho(d, d-k-1)
  bool satisfied_vertices = false;
  bool satisfied_facets = false;
  bool equality_vertices = false;
  bool equality_facets = false;
  bool predicted_vertices = false;  // k == 0 or (k == 1 and simple)
  bool predicted_facets = false;    // k == d-1 or (k == d-2 and simplicial)

  bool ok() const {
    return satisfied_vertices && satisfied_facets && equality_vertices == predicted_vertices &&
           equality_facets == predicted_facets;
  }
};

struct BoundReport {
  int dim = 0;
  FVector f{0, {}};
  bool simple = false;
  bool simplicial = false;
  std::vector<BoundRow> rows;

  bool ok() const;
};

/// Evaluates f_k/f_0 >= rho(d,k) and f_k/f_{d-1} >= rho(d,d-k-1) for every k
/// and classifies equality. Throws BoundViolated (message carries a JSON dump
/// of the report) if a bound fails or equality disagrees with the predicted set.
BoundReport verify_main_bounds(const Polytope& polytope);
/// Same evaluation without throwing.
BoundReport evaluate_main_bounds(const FVector& f, bool simple, bool simplicial);

struct BaranyRow {
  int k = 0;
  long long f_k = 0;
  bool at_least_min = false;
  /// Refined claims; `applies_*` false when k is outside the claimed range.
  bool applies_vertices = false;
  bool at_least_vertices = false;
  bool applies_facets = false;
  bool at_least_facets = false;
};

struct BaranyReport {
  long long min_count = 0;
  std::vector<BaranyRow> rows;
  bool ok = false;
};

BaranyReport barany_check(const Polytope& polytope);
BaranyReport barany_check(const FVector& f);

/// C(d+1,k+1) + C(d,k+1) - C(d+1-s,k+1), for 1 <= s <= d.
Integer xue_bound(int d, int s, int k);

struct XueReport {
  bool applicable = false;
  int s = 0;
  std::vector<Integer> bounds;  // per k
  bool ok = true;
};

XueReport xue_check(const Polytope& polytope);
XueReport xue_check(const FVector& f);

enum class Relation { Less, LessEq, Greater, GreaterEq };
std::string_view to_string(Relation r);

/// One inequality f_i (relation) f_{i+1} of a unimodality chain.
struct ChainLink {
  int index = 0;
  Relation relation = Relation::Less;
  bool holds = false;
};

struct BjornerReport {
  bool applicable = false;
  bool checked_simplicial = false;
  bool checked_simple = false;
  std::vector<ChainLink> links;
  bool ok = true;
};

BjornerReport bjorner_check(const Polytope& polytope);
BjornerReport bjorner_check(const FVector& f, bool simple, bool simplicial);

}  // namespace polyface
