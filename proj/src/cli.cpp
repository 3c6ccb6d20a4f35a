#include "polyface/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "polyface/bounds.hpp"
#include "polyface/corpus.hpp"
#include "polyface/projection.hpp"
#include "polyface/rng.hpp"
#include "polyface/serialize.hpp"
#include "polyface/solid_angles.hpp"

namespace polyface {

namespace {

// Independent seed streams per report section.
constexpr std::uint64_t kSumStream = 0;
constexpr std::uint64_t kCurvatureStream = 1;

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Polytope load_polytope(const RunConfig& cfg) {
  if (!cfg.input.empty()) {
    std::ifstream in(cfg.input);
    if (!in) throw BadInput("cannot read " + cfg.input);
    Json j;
    try {
      in >> j;
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    return polytope_from_json(j);
  }
  if (!cfg.family) throw BadInput("need --input or --family");
  return generate({*cfg.family, cfg.dim, cfg.n, cfg.seed});
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw BadInput("cannot write " + cfg.output);
  file << text;
  if (!file) throw BadInput("write failed: " + cfg.output);
}

void emit(const RunConfig& cfg, std::ostream& out, const Json& j) { emit(cfg, out, j.dump(2) + "\n"); }

int fail(std::ostream& err, const Polytope& p, const char* what, Json report) {
  Json dump{{"failed", what}, {"polytope", polytope_to_json(p)}, {"report", std::move(report)}};
  err << dump.dump() << "\n";
  return kExitCheckFailed;
}

Json describe_json(const Polytope& p) {
  const FVector f = f_vector(p);
  const long long expected = p.dim() % 2 == 0 ? 0 : 2;
  return {{"ambient_dim", p.ambient_dim()},
          {"dim", p.dim()},
          {"f_vector", to_json(f)},
          {"simple", is_simple(p)},
          {"simplicial", is_simplicial(p)},
          {"euler", {{"sum", f.euler_sum()}, {"expected", expected}, {"ok", f.euler_sum() == expected}}}};
}

int cmd_describe(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Polytope p = load_polytope(cfg);
  Json j = describe_json(p);
  emit(cfg, out, j);
  if (!j["euler"]["ok"].get<bool>()) return fail(err, p, "euler", j);
  return kExitOk;
}

int cmd_verify_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Polytope p = load_polytope(cfg);
  const FVector f = f_vector(p);
  const auto bounds = evaluate_main_bounds(f, is_simple(p), is_simplicial(p));
  const auto barany = barany_check(f);
  const auto xue = xue_check(f);
  const auto bjorner = bjorner_check(f, bounds.simple, bounds.simplicial);
  Json j{{"bounds", to_json(bounds)}, {"barany", to_json(barany)}, {"xue", to_json(xue)}, {"bjorner", to_json(bjorner)}};
  emit(cfg, out, j);
  if (!bounds.ok()) return fail(err, p, "bounds", j["bounds"]);
  if (!barany.ok) return fail(err, p, "barany", j["barany"]);
  if (!xue.ok) return fail(err, p, "xue", j["xue"]);
  if (!bjorner.ok) return fail(err, p, "bjorner", j["bjorner"]);
  return kExitOk;
}

int cmd_angles(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Polytope p = load_polytope(cfg);
  const int d = p.dim();
  const double sigma = cfg.tolerance_sigma;
  Json j{{"dim", d}, {"samples", cfg.samples}, {"seed", cfg.seed}};
  bool ok = true;
  const char* failed = "";

  std::vector<AngleSumReport> sums;
  Json sums_json = Json::array();
  for (int k = 0; k <= d; ++k) {
    const auto seed = derive_seed(derive_seed(cfg.seed, kSumStream), static_cast<std::uint64_t>(k));
    sums.push_back(angle_sum(p, k, cfg.samples, seed));
    sums_json.push_back(to_json(sums.back()));
  }
  j["angle_sums"] = sums_json;

  Json curv = Json::array();
  if (d >= 2) {
    const auto facets = facet_polytopes(p);
    const auto base = derive_seed(cfg.seed, kCurvatureStream);
    const auto& lattice = p.lattice();
    for (int g = 0; g <= d - 2; ++g) {
      for (auto i : lattice.faces_of_dim(g)) {
        auto r = curvature_check(p, facets, lattice.faces()[i].vertex_set, cfg.samples,
                                 derive_seed(base, i), sigma);
        if (!r.within_bound && ok) {
          ok = false;
          failed = "curvature";
        }
        curv.push_back(to_json(r));
      }
    }
  }
  j["curvature"] = curv;

  Json props = Json::array();
  for (int k = 0; k + 1 <= d; ++k) {
    auto r = prop_angle_sum_check(p, sums[static_cast<std::size_t>(k)], sigma);
    if (!r.pass && ok) {
      ok = false;
      failed = "angle-sum-lower-bound";
    }
    props.push_back(to_json(r));
  }
  j["angle_sum_lower_bound"] = props;

  Json perles = Json::array();
  if (d >= 1) {
    const auto dirs = sample_directions(p, static_cast<std::size_t>(cfg.directions), cfg.seed);
    std::vector<ShadowPolytope> shadows;
    for (const auto& v : dirs) shadows.push_back(shadow(p, v));
    for (int k = 0; k <= d - 1; ++k) {
      perles.push_back(to_json(perles_check(p, k, shadows, sums[static_cast<std::size_t>(k)], sigma)));
    }
  }
  j["projection_angle_bound"] = perles;
  emit(cfg, out, j);
  if (!ok) return fail(err, p, failed, j);
  return kExitOk;
}

int cmd_project(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Polytope q = load_polytope(cfg);
  if (q.dim() < 2) throw Error(ErrorCode::DimensionTooLow, "project needs a polytope of dimension >= 2");
  std::vector<Direction> dirs;
  if (cfg.direction) {
    std::vector<Scalar> coords(cfg.direction->begin(), cfg.direction->end());
    if (coords.size() != static_cast<std::size_t>(q.dim())) {
      throw BadInput("direction needs " + std::to_string(q.dim()) + " coordinates (intrinsic)");
    }
    dirs.push_back(verify_direction(q, Vector(std::move(coords))));
    if (!dirs.back().verified) throw Error(ErrorCode::NotGeneralPosition, "direction is not in general position");
  } else {
    dirs = sample_directions(q, static_cast<std::size_t>(cfg.directions), cfg.seed);
  }

  bool ok = true;
  const char* failed = "";
  Json reports = Json::array();
  for (const auto& v : dirs) {
    const auto sh = shadow(q, v);
    const auto cx = upper_lower(q, v, sh);
    const auto dvs = diagram_vertices(q, v, sh, cx);
    std::vector<GapReport> gaps;
    for (int k = 0; k < q.dim(); ++k) gaps.push_back(gap_check(q, sh, k));
    Json r = projection_to_json(v, sh, cx, dvs, gaps);

    bool interior = false;
    Json witnesses = Json::array();
    for (const auto& dv : dvs) {
      if (!dv.interior) continue;
      interior = true;
      auto w = quotient_dim_witness(q, dv);
      if (!w.ok && ok) {
        ok = false;
        failed = "quotient-witness";
      }
      witnesses.push_back(to_json(w));
    }
    r["interior_vertex"] = interior;
    r["witnesses"] = witnesses;
    if (!cx.boundary_matches_shadow && ok) {
      ok = false;
      failed = "shadow-boundary";
    }
    if (!interior && ok) {
      ok = false;
      failed = "interior-vertex";
    }
    for (const auto& g : gaps) {
      if (!g.pass && ok) {
        ok = false;
        failed = "gap";
      }
    }
    reports.push_back(std::move(r));
  }
  Json j{{"dim", q.dim()}, {"projections", reports}};
  emit(cfg, out, j);
  if (!ok) return fail(err, q, failed, j);
  return kExitOk;
}

int cmd_corpus(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<FamilySpec> specs;
  if (cfg.families.empty() && !cfg.dims) {
    specs = standard_corpus(cfg.seed);
  } else {
    const auto families = cfg.families.empty()
                              ? std::vector<Family>{Family::Simplex, Family::Cube, Family::Cross, Family::Cyclic}
                              : cfg.families;
    const auto [lo, hi] = cfg.dims.value_or(std::pair{2, 5});
    specs = corpus_product(families, lo, hi, cfg.seed);
  }
  const auto entries = run_corpus(specs);
  emit(cfg, out, corpus_csv(entries));
  Json bad = Json::array();
  for (const auto& e : entries) {
    if (e.ok()) continue;
    Json item{{"family", e.label}, {"dim", e.spec.dim}};
    if (!e.error.empty()) {
      item["error"] = e.error;
    } else {
      item["bounds"] = to_json(e.bounds);
      item["barany"] = to_json(e.barany);
      item["xue"] = to_json(e.xue);
      item["bjorner"] = to_json(e.bjorner);
      item["euler_ok"] = e.euler_ok;
    }
    bad.push_back(std::move(item));
  }
  if (!bad.empty()) {
    err << Json{{"failed", "corpus"}, {"entries", bad}}.dump() << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.samples < 1) throw BadInput("--samples must be >= 1");
    if (cfg.directions < 1) throw BadInput("--directions must be >= 1");
    switch (cfg.command) {
      case Command::Gen:
        emit(cfg, out, polytope_to_json(load_polytope(cfg)));
        return kExitOk;
      case Command::Describe: return cmd_describe(cfg, out, err);
      case Command::VerifyBounds: return cmd_verify_bounds(cfg, out, err);
      case Command::Angles: return cmd_angles(cfg, out, err);
      case Command::Project: return cmd_project(cfg, out, err);
      case Command::Corpus: return cmd_corpus(cfg, out, err);
    }
  } catch (const BadInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace polyface
