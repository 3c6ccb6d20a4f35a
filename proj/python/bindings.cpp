#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyface/bounds.hpp"
#include "polyface/corpus.hpp"
#include "polyface/generators.hpp"
#include "polyface/projection.hpp"
#include "polyface/serialize.hpp"
#include "polyface/solid_angles.hpp"

namespace py = pybind11;
using namespace polyface;

namespace {

// Coordinates cross the boundary as "p/q" strings or Python ints.
Scalar to_scalar(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_scalar(h.cast<std::string>());
  return Scalar(h.cast<long long>());
}

Vector to_vector(const py::sequence& seq) {
  std::vector<Scalar> coords;
  for (const auto& item : seq) coords.push_back(to_scalar(item));
  return Vector(std::move(coords));
}

std::vector<std::string> to_strings(const Vector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(format_scalar(x));
  return out;
}

IndexSet face_set(const Polytope& p, const std::vector<std::size_t>& face) {
  for (auto i : face) {
    if (i >= p.vertex_count()) throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(i));
  }
  return make_index_set(p.vertex_count(), face);
}

Direction direction_arg(const Polytope& q, const py::object& direction, std::uint64_t seed) {
  if (direction.is_none()) return sample_direction(q, seed);
  auto v = verify_direction(q, to_vector(direction.cast<py::sequence>()));
  if (!v.verified) throw Error(ErrorCode::NotGeneralPosition, "direction is not in general position");
  return v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact polytope face lattices, bounds, angle sums and projections";

  py::register_exception<Error>(m, "PolyfaceError", PyExc_ValueError);

  py::class_<Polytope>(m, "Polytope")
      .def_property_readonly("dim", &Polytope::dim)
      .def_property_readonly("ambient_dim", &Polytope::ambient_dim)
      .def_property_readonly("vertex_count", &Polytope::vertex_count)
      .def_property_readonly("vertices",
                             [](const Polytope& p) {
                               std::vector<std::vector<std::string>> out;
                               for (const auto& v : p.ambient_vertices()) out.push_back(to_strings(v));
                               return out;
                             })
      .def_property_readonly("facets",
                             [](const Polytope& p) {
                               std::vector<std::vector<std::size_t>> out;
                               for (const auto& f : p.facets()) out.push_back(members(f.vertex_set));
                               return out;
                             })
      .def_property_readonly("f_vector", [](const Polytope& p) { return f_vector(p).counts(); })
      .def_property_readonly("is_simple", [](const Polytope& p) { return is_simple(p); })
      .def_property_readonly("is_simplicial", [](const Polytope& p) { return is_simplicial(p); })
      .def("faces", [](const Polytope& p, int k) {
        std::vector<std::vector<std::size_t>> out;
        for (auto i : p.lattice().faces_of_dim(k)) out.push_back(members(p.lattice().faces()[i].vertex_set));
        return out;
      })
      .def("to_json", [](const Polytope& p) { return polytope_to_json(p).dump(); })
      .def("__repr__", [](const Polytope& p) {
        return "<Polytope dim=" + std::to_string(p.dim()) + " vertices=" + std::to_string(p.vertex_count()) + ">";
      });

  m.def(
      "generate",
      [](const std::string& family, int dim, std::optional<int> n, std::uint64_t seed) {
        return generate({parse_family(family), dim, n, seed});
      },
      py::arg("family"), py::arg("dim"), py::arg("n") = py::none(), py::arg("seed") = 0);
  m.def(
      "hull",
      [](const py::sequence& points) {
        std::vector<Vector> pts;
        for (const auto& p : points) pts.push_back(to_vector(p.cast<py::sequence>()));
        return hull_from_points(pts);
      },
      py::arg("points"));
  m.def(
      "from_json", [](const std::string& text) { return polytope_from_json(Json::parse(text)); }, py::arg("text"));

  m.def(
      "rho", [](int d, int k) { return format_scalar(rho(d, k)); }, py::arg("d"), py::arg("k"));
  m.def(
      "verify_bounds_json",
      [](const Polytope& p) {
        const FVector f = f_vector(p);
        const auto bounds = evaluate_main_bounds(f, is_simple(p), is_simplicial(p));
        Json j{{"bounds", to_json(bounds)},
               {"barany", to_json(barany_check(f))},
               {"xue", to_json(xue_check(f))},
               {"bjorner", to_json(bjorner_check(f, bounds.simple, bounds.simplicial))}};
        return j.dump();
      },
      py::arg("polytope"));

  m.def(
      "solid_angle_json",
      [](const Polytope& p, const std::vector<std::size_t>& face, std::uint64_t samples, std::uint64_t seed) {
        const IndexSet g = face_set(p, face);
        py::gil_scoped_release release;
        return to_json(g, solid_angle(p, g, samples, seed), Verdict::Pass).dump();
      },
      py::arg("polytope"), py::arg("face"), py::arg("samples") = kDefaultSamples, py::arg("seed") = 0);
  m.def(
      "angle_sum_json",
      [](const Polytope& p, int k, std::uint64_t samples, std::uint64_t seed) {
        py::gil_scoped_release release;
        return to_json(angle_sum(p, k, samples, seed)).dump();
      },
      py::arg("polytope"), py::arg("k"), py::arg("samples") = kDefaultSamples, py::arg("seed") = 0);
  m.def(
      "curvature_json",
      [](const Polytope& p, const std::vector<std::size_t>& face, std::uint64_t samples, std::uint64_t seed) {
        const IndexSet g = face_set(p, face);
        py::gil_scoped_release release;
        return to_json(curvature_check(p, g, samples, seed)).dump();
      },
      py::arg("polytope"), py::arg("face"), py::arg("samples") = kDefaultSamples, py::arg("seed") = 0);

  m.def(
      "sample_direction",
      [](const Polytope& q, std::uint64_t seed) { return to_strings(sample_direction(q, seed).v); },
      py::arg("polytope"), py::arg("seed") = 0);
  m.def(
      "project_json",
      [](const Polytope& q, const py::object& direction, std::uint64_t seed) {
        const Direction v = direction_arg(q, direction, seed);
        const auto sh = shadow(q, v);
        const auto cx = upper_lower(q, v, sh);
        const auto dvs = diagram_vertices(q, v, sh, cx);
        std::vector<GapReport> gaps;
        for (int k = 0; k < q.dim(); ++k) gaps.push_back(gap_check(q, sh, k));
        return projection_to_json(v, sh, cx, dvs, gaps).dump();
      },
      py::arg("polytope"), py::arg("direction") = py::none(), py::arg("seed") = 0);
  m.def(
      "diagram_lemma_check",
      [](const Polytope& q, const py::object& direction, std::uint64_t seed) {
        return diagram_lemma_check(q, direction_arg(q, direction, seed));
      },
      py::arg("polytope"), py::arg("direction") = py::none(), py::arg("seed") = 0);

  m.def(
      "corpus_csv",
      [](std::uint64_t seed) {
        py::gil_scoped_release release;
        return corpus_csv(run_corpus(standard_corpus(seed)));
      },
      py::arg("seed") = 0);
}
