#include "polyface/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polyface {

IndexSet make_index_set(std::size_t size, std::span<const std::size_t> members) {
  IndexSet set(size);
  for (auto m : members) set.set(m);
  return set;
}

std::vector<std::size_t> members(const IndexSet& set) {
  std::vector<std::size_t> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != IndexSet::npos; i = set.find_next(i)) out.push_back(i);
  return out;
}

Vector Embedding::apply(const Vector& intrinsic) const {
  Vector x = origin;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (intrinsic[i] != 0) x += basis[i] * intrinsic[i];
  }
  return x;
}

bool Embedding::is_identity() const {
  if (!origin.is_zero() || basis.size() != origin.dim()) return false;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i] != Vector::unit(origin.dim(), i)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// FaceLattice / FVector

FaceLattice::FaceLattice(int dim, std::size_t atom_count, std::vector<Face> faces)
    : dim_(dim), atom_count_(atom_count), faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_set < b.vertex_set;
  });
  // Graded, so covers are exactly the inclusions between adjacent ranks.
  std::size_t lo = 0;
  while (lo < faces_.size()) {
    std::size_t hi = lo;
    while (hi < faces_.size() && faces_[hi].dim == faces_[lo].dim) ++hi;
    std::size_t end = hi;
    while (end < faces_.size() && faces_[end].dim == faces_[lo].dim + 1) ++end;
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = hi; j < end; ++j) {
        if (faces_[i].vertex_set.is_subset_of(faces_[j].vertex_set)) covers_.emplace_back(i, j);
      }
    }
    lo = hi;
  }
}

std::optional<std::size_t> FaceLattice::find(const IndexSet& vertex_set) const {
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (faces_[i].vertex_set == vertex_set) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> FaceLattice::faces_of_dim(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (faces_[i].dim == k) out.push_back(i);
  }
  return out;
}

std::size_t FaceLattice::count(int k) const {
  return static_cast<std::size_t>(
      std::count_if(faces_.begin(), faces_.end(), [k](const Face& f) { return f.dim == k; }));
}

long long FVector::operator[](int k) const {
  if (k == -1 || k == dim_) return 1;
  if (k < -1 || k > dim_) return 0;
  return counts_[static_cast<std::size_t>(k)];
}

long long FVector::euler_sum() const {
  long long sum = 0;
  for (std::size_t k = 0; k < counts_.size(); ++k) sum += (k % 2 == 0 ? 1 : -1) * counts_[k];
  return sum;
}

FVector f_vector(const FaceLattice& lattice) {
  std::vector<long long> counts;
  for (int k = 0; k < lattice.dim(); ++k) counts.push_back(static_cast<long long>(lattice.count(k)));
  FVector f(lattice.dim(), std::move(counts));
  const long long expected = lattice.dim() % 2 == 0 ? 0 : 2;
  if (f.euler_sum() != expected) {
    throw Error(ErrorCode::EulerViolation, "alternating face sum " + std::to_string(f.euler_sum()) +
                                               " != " + std::to_string(expected) + " in dimension " +
                                               std::to_string(lattice.dim()));
  }
  return f;
}

FVector f_vector(const Polytope& polytope) { return f_vector(polytope.lattice()); }

// ---------------------------------------------------------------------------
// Hull

namespace {

IndexSet closure(const IndexSet& s, const std::vector<IndexSet>& facet_sets, std::size_t n) {
  IndexSet result(n);
  result.set();
  for (const auto& f : facet_sets) {
    if (s.is_subset_of(f)) result &= f;
  }
  return result;
}

std::shared_ptr<const FaceLattice> build_lattice(int dim, std::size_t n,
                                                 const std::vector<IndexSet>& facet_sets) {
  std::vector<Face> faces;
  faces.push_back({IndexSet(n), -1});
  IndexSet full(n);
  full.set();

  std::vector<IndexSet> level;
  for (std::size_t v = 0; v < n; ++v) {
    IndexSet s(n);
    s.set(v);
    level.push_back(s);
  }
  int k = 0;
  while (true) {
    for (const auto& s : level) faces.push_back({s, k});
    if (level.size() == 1 && level.front() == full) break;
    std::set<IndexSet> next;
    for (const auto& face : level) {
      std::vector<IndexSet> candidates;
      for (std::size_t w = 0; w < n; ++w) {
        if (face.test(w)) continue;
        IndexSet s = face;
        s.set(w);
        IndexSet c = closure(s, facet_sets, n);
        if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) candidates.push_back(c);
      }
      for (const auto& c : candidates) {
        const bool minimal = std::none_of(candidates.begin(), candidates.end(), [&](const IndexSet& o) {
          return o != c && o.is_subset_of(c);
        });
        if (minimal) next.insert(c);
      }
    }
    level.assign(next.begin(), next.end());
    ++k;
    if (k > dim) throw Error(ErrorCode::EulerViolation, "face lattice exceeded the polytope dimension");
  }
  if (k != dim) throw Error(ErrorCode::EulerViolation, "face lattice height does not match dimension");
  return std::make_shared<const FaceLattice>(dim, n, std::move(faces));
}

}  // namespace

Polytope hull_from_points(std::span<const Vector> input) {
  if (input.empty()) throw Error(ErrorCode::EmptyInput, "hull of no points");
  const std::size_t ambient = input.front().dim();
  if (ambient == 0) throw Error(ErrorCode::MixedDimensions, "points must have dimension >= 1");
  for (const auto& p : input) {
    if (p.dim() != ambient) throw Error(ErrorCode::MixedDimensions, "points of different dimensions");
  }
  if (input.size() > kMaxPoints) {
    throw Error(ErrorCode::TooLarge, std::to_string(input.size()) + " points exceed the limit of " +
                                         std::to_string(kMaxPoints));
  }

  std::vector<Vector> points;
  std::vector<std::size_t> source;
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (std::find(points.begin(), points.end(), input[i]) == points.end()) {
      points.push_back(input[i]);
      source.push_back(i);
    }
  }

  const int m = affine_dim(points);
  if (m > kMaxDim) {
    throw Error(ErrorCode::TooLarge, "intrinsic dimension " + std::to_string(m) + " exceeds " +
                                         std::to_string(kMaxDim));
  }

  Polytope out;
  out.ambient_dim_ = static_cast<int>(ambient);
  out.dim_ = m;

  Embedding& emb = out.embedding_;
  std::vector<Vector> local;
  if (static_cast<std::size_t>(m) == ambient) {
    emb.origin = Vector(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
      emb.basis.push_back(Vector::unit(ambient, i));
      emb.weights.emplace_back(1);
    }
    local = points;
  } else {
    emb.origin = points.front();
    std::vector<Vector> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - emb.origin);
    emb.basis = gram_schmidt(diffs);
    for (const auto& b : emb.basis) emb.weights.push_back(dot(b, b));
    for (const auto& p : points) {
      const Vector d = p - emb.origin;
      Vector c(static_cast<std::size_t>(m));
      for (std::size_t j = 0; j < emb.basis.size(); ++j) c[j] = dot(d, emb.basis[j]) / emb.weights[j];
      local.push_back(std::move(c));
    }
  }

  const std::size_t n = local.size();
  std::vector<IndexSet> point_sets;
  std::vector<Hyperplane> planes;
  if (m >= 1) {
    for_each_spanning_hyperplane(std::span<const Vector>(local),
                                 [&](const std::vector<std::size_t>& subset, const Vector& normal) {
      IndexSet chosen = make_index_set(n, subset);
      for (const auto& f : point_sets) {
        if (chosen.is_subset_of(f)) return true;
      }
      const Scalar ref = dot(normal, local[subset.front()]);
      bool pos = false, neg = false;
      IndexSet on(n);
      for (std::size_t i = 0; i < n; ++i) {
        const Scalar s = dot(normal, local[i]) - ref;
        if (s > 0) pos = true;
        else if (s < 0) neg = true;
        else on.set(i);
        if (pos && neg) return true;
      }
      Vector outward = pos ? normal * Scalar(-1) : normal;
      outward = primitive(outward);
      point_sets.push_back(on);
      planes.push_back({outward, dot(outward, local[subset.front()])});
      return true;
    });
  }

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    if (m == 0) {
      keep.push_back(i);
      continue;
    }
    IndexSet s(n);
    s.set(i);
    const IndexSet c = closure(s, point_sets, n);
    if (c.count() == 1) keep.push_back(i);
  }

  for (auto i : keep) {
    out.vertices_.push_back(local[i]);
    out.source_index_.push_back(source[i]);
  }
  std::vector<IndexSet> facet_sets;
  for (std::size_t f = 0; f < point_sets.size(); ++f) {
    IndexSet vs(keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (point_sets[f].test(keep[j])) vs.set(j);
    }
    facet_sets.push_back(vs);
    out.facets_.push_back({vs, planes[f]});
  }
  out.lattice_ = build_lattice(m, keep.size(), facet_sets);
  return out;
}

std::vector<Vector> Polytope::ambient_vertices() const {
  std::vector<Vector> out;
  out.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) out.push_back(ambient_vertex(i));
  return out;
}

IndexSet Polytope::facets_containing(const IndexSet& vertex_set) const {
  IndexSet out(facets_.size());
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    if (vertex_set.is_subset_of(facets_[f].vertex_set)) out.set(f);
  }
  return out;
}

FaceLattice face_lattice(const Polytope& polytope) { return polytope.lattice(); }

bool is_simple(const Polytope& polytope) {
  for (std::size_t v = 0; v < polytope.vertex_count(); ++v) {
    std::size_t count = 0;
    for (const auto& f : polytope.facets()) count += f.vertex_set.test(v) ? 1 : 0;
    if (count != static_cast<std::size_t>(polytope.dim())) return false;
  }
  return true;
}

bool is_simplicial(const Polytope& polytope) {
  return std::all_of(polytope.facets().begin(), polytope.facets().end(), [&](const FacetRecord& f) {
    return f.vertex_set.count() == static_cast<std::size_t>(polytope.dim());
  });
}

// ---------------------------------------------------------------------------
// Lattice operations

FaceLattice dual(const FaceLattice& lattice) {
  const auto coatoms = lattice.faces_of_dim(lattice.dim() - 1);
  std::vector<Face> faces;
  faces.reserve(lattice.faces().size());
  for (const auto& g : lattice.faces()) {
    IndexSet atoms(coatoms.size());
    for (std::size_t c = 0; c < coatoms.size(); ++c) {
      if (g.vertex_set.is_subset_of(lattice.faces()[coatoms[c]].vertex_set)) atoms.set(c);
    }
    faces.push_back({atoms, lattice.dim() - 1 - g.dim});
  }
  return FaceLattice(lattice.dim(), coatoms.size(), std::move(faces));
}

FaceLattice quotient(const FaceLattice& lattice, const IndexSet& face) {
  const auto idx = lattice.find(face);
  if (!idx) throw Error(ErrorCode::NotAFace, "vertex set is not a face of the lattice");
  const Face& g = lattice.faces()[*idx];
  if (g.dim < 0) throw Error(ErrorCode::NotAFace, "quotient by the empty face");
  if (g.dim == lattice.dim()) throw Error(ErrorCode::NotAFace, "quotient by the whole polytope");

  std::vector<std::size_t> atoms;
  for (auto i : lattice.faces_of_dim(g.dim + 1)) {
    if (g.vertex_set.is_subset_of(lattice.faces()[i].vertex_set)) atoms.push_back(i);
  }
  std::vector<Face> faces;
  for (const auto& h : lattice.faces()) {
    if (!g.vertex_set.is_subset_of(h.vertex_set)) continue;
    IndexSet a(atoms.size());
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      if (lattice.faces()[atoms[j]].vertex_set.is_subset_of(h.vertex_set)) a.set(j);
    }
    faces.push_back({a, h.dim - g.dim - 1});
  }
  return FaceLattice(lattice.dim() - g.dim - 1, atoms.size(), std::move(faces));
}

namespace {

struct IsoSearch {
  const FaceLattice& a;
  const FaceLattice& b;
  std::set<IndexSet> b_faces;
  std::vector<std::vector<std::size_t>> sig_a, sig_b;
  // Faces of `a` (by index) grouped by the position at which their last atom is assigned.
  std::vector<std::vector<std::size_t>> completes_at;
  std::vector<std::size_t> image;
  std::vector<bool> used;

  IsoSearch(const FaceLattice& a_, const FaceLattice& b_) : a(a_), b(b_) {
    for (const auto& f : b.faces()) b_faces.insert(f.vertex_set);
    sig_a = signatures(a);
    sig_b = signatures(b);
    completes_at.resize(a.atom_count());
    for (std::size_t i = 0; i < a.faces().size(); ++i) {
      const auto& vs = a.faces()[i].vertex_set;
      if (vs.none()) continue;
      std::size_t last = 0;
      for (auto j = vs.find_first(); j != IndexSet::npos; j = vs.find_next(j)) last = j;
      completes_at[last].push_back(i);
    }
    image.assign(a.atom_count(), 0);
    used.assign(b.atom_count(), false);
  }

  static std::vector<std::vector<std::size_t>> signatures(const FaceLattice& l) {
    std::vector<std::vector<std::size_t>> sig(l.atom_count(), std::vector<std::size_t>(l.dim() + 2, 0));
    for (const auto& f : l.faces()) {
      for (auto j = f.vertex_set.find_first(); j != IndexSet::npos; j = f.vertex_set.find_next(j)) {
        ++sig[j][static_cast<std::size_t>(f.dim + 1)];
      }
    }
    return sig;
  }

  bool run(std::size_t atom) {
    if (atom == a.atom_count()) return true;
    for (std::size_t t = 0; t < b.atom_count(); ++t) {
      if (used[t] || sig_a[atom] != sig_b[t]) continue;
      image[atom] = t;
      used[t] = true;
      bool ok = true;
      for (auto fi : completes_at[atom]) {
        IndexSet mapped(b.atom_count());
        const auto& vs = a.faces()[fi].vertex_set;
        for (auto j = vs.find_first(); j != IndexSet::npos; j = vs.find_next(j)) mapped.set(image[j]);
        if (!b_faces.count(mapped)) {
          ok = false;
          break;
        }
      }
      if (ok && run(atom + 1)) return true;
      used[t] = false;
    }
    return false;
  }
};

}  // namespace

bool isomorphic(const FaceLattice& a, const FaceLattice& b) {
  if (a.dim() != b.dim() || a.atom_count() != b.atom_count() || a.faces().size() != b.faces().size()) {
    return false;
  }
  for (int k = -1; k <= a.dim(); ++k) {
    if (a.count(k) != b.count(k)) return false;
  }
  IsoSearch search(a, b);
  return search.run(0);
}

std::vector<std::size_t> facet_vertex_indices(const Polytope& polytope, std::size_t facet_index) {
  if (facet_index >= polytope.facets().size()) {
    throw Error(ErrorCode::IndexOutOfRange, "facet " + std::to_string(facet_index) + " of " +
                                                std::to_string(polytope.facets().size()));
  }
  return members(polytope.facets()[facet_index].vertex_set);
}

Polytope facet_as_polytope(const Polytope& polytope, std::size_t facet_index) {
  const auto idx = facet_vertex_indices(polytope, facet_index);
  std::vector<Vector> pts;
  pts.reserve(idx.size());
  for (auto i : idx) pts.push_back(polytope.ambient_vertex(i));
  return hull_from_points(pts);
}

}  // namespace polyface
